#pragma once

// Diagonal-coefficient distributions of the two modes and of the joint system,
// their Shannon entropies in bits, and an exact von Neumann entropy of the
// reduced state for comparison.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "qev/specfun.hpp"
#include "qev/state.hpp"

namespace qev {

enum class Mode { a, b, joint };

inline const char* to_string(Mode m) {
  switch (m) {
    case Mode::a: return "a";
    case Mode::b: return "b";
    case Mode::joint: return "joint";
  }
  return "?";
}

struct ModalDistribution {
  Mode mode = Mode::joint;
  std::vector<double> probs;
};

/// T_k = C(m,k) eta_x^(2(m-k)) eta_y^(2k) F_k, normalized to sum one, with
///   mode a:  F_k = 2F1((k+1)/2, (k+2)/2; 1; xi_y^2)
///   mode b:  F_k = 2F1((m-k+1)/2, (m-k+2)/2; 1; xi_x^2)
///   joint:   F_k = 1.
inline ModalDistribution modal_distribution(const QevParams& p, Mode mode) {
  p.validate();
  const DerivedParams d = derive(p);
  const unsigned m = p.m;
  std::vector<double> logt(m + 1);
  for (unsigned k = 0; k <= m; ++k) {
    double lt = log_binomial(m, k) + 2.0 * (m - k) * std::log(p.eta_x) + 2.0 * k * std::log(p.eta_y);
    if (mode == Mode::a) {
      lt += std::log(gauss_2f1((k + 1) / 2.0, (k + 2) / 2.0, 1.0, d.xi_y * d.xi_y));
    } else if (mode == Mode::b) {
      lt += std::log(gauss_2f1((m - k + 1) / 2.0, (m - k + 2) / 2.0, 1.0, d.xi_x * d.xi_x));
    }
    logt[k] = lt;
  }
  const double top = *std::max_element(logt.begin(), logt.end());
  double total = 0.0;
  for (double lt : logt) total += std::exp(lt - top);
  ModalDistribution out{mode, std::vector<double>(m + 1)};
  for (unsigned k = 0; k <= m; ++k) out.probs[k] = std::exp(logt[k] - top) / total;
  return out;
}

/// -sum p log2 p with 0 log 0 = 0.
inline double shannon_entropy(const std::vector<double>& probs) {
  double s = 0.0;
  for (double q : probs)
    if (q > 0.0) s -= q * std::log2(q);
  return std::max(0.0, s);
}

inline double shannon_entropy(const ModalDistribution& d) { return shannon_entropy(d.probs); }

inline constexpr double kInequalityTolerance = 1e-9;

struct EntropyReport {
  double s_a = 0.0;
  double s_b = 0.0;
  double s_ab = 0.0;
  double i_c = 0.0;  // s_a + s_b - s_ab
  bool subadditivity_ok = true;
  bool araki_lieb_ok = true;
};

inline EntropyReport entropy_report(const QevParams& p) {
  EntropyReport r;
  r.s_a = shannon_entropy(modal_distribution(p, Mode::a));
  r.s_b = shannon_entropy(modal_distribution(p, Mode::b));
  r.s_ab = shannon_entropy(modal_distribution(p, Mode::joint));
  r.i_c = r.s_a + r.s_b - r.s_ab;
  r.subadditivity_ok = r.s_ab <= r.s_a + r.s_b + kInequalityTolerance;
  r.araki_lieb_ok = r.s_ab >= std::abs(r.s_a - r.s_b) - kInequalityTolerance;
  return r;
}

inline constexpr double kEigenvalueFloor = 1e-14;

/// Von Neumann entropy (bits) of the reduced state of mode a for the truncated
/// Fock vector: rho_a = A A^dagger with A the amplitude table.
inline double eigen_entropy_oracle(const TwoModeFockVector& vec) {
  const Eigen::MatrixXcd rho = vec.amplitudes * vec.amplitudes.adjoint();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NonConvergence("eigen_entropy_oracle: eigensolver failed");
  double s = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (lambda > kEigenvalueFloor) s -= lambda * std::log2(lambda);
  }
  return std::max(0.0, s);
}

inline double eigen_entropy_oracle(const QevParams& p, std::size_t cutoff) {
  return eigen_entropy_oracle(fock_amplitudes(p, cutoff));
}

inline double eigen_entropy_oracle(const QevParams& p) { return eigen_entropy_oracle(fock_amplitudes(p)); }

}  // namespace qev
