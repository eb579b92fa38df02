#pragma once

// Quadrature moments, standard deviations and uncertainty products.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qev/errors.hpp"
#include "qev/quadrature.hpp"
#include "qev/state.hpp"
#include "qev/wigner.hpp"

namespace qev {

/// First and second moments of one conjugate pair family (x, y) or (px, py).
struct QuadratureMoments {
  double mean_x = 0.0;
  double mean_y = 0.0;
  double second_x = 0.0;
  double second_y = 0.0;
};

struct UncertaintyReport {
  double dx = 0.0;
  double dy = 0.0;
  double dpx = 0.0;
  double dpy = 0.0;
  double prod_x = 0.0;
  double prod_y = 0.0;
  double sum = 0.0;
};

inline UncertaintyReport make_uncertainty_report(const QuadratureMoments& pos, const QuadratureMoments& mom) {
  auto sd = [](double second, double mean) { return std::sqrt(std::max(0.0, second - mean * mean)); };
  UncertaintyReport r;
  r.dx = sd(pos.second_x, pos.mean_x);
  r.dy = sd(pos.second_y, pos.mean_y);
  r.dpx = sd(mom.second_x, mom.mean_x);
  r.dpy = sd(mom.second_y, mom.mean_y);
  r.prod_x = r.dx * r.dpx;
  r.prod_y = r.dy * r.dpy;
  r.sum = r.prod_x + r.prod_y;
  return r;
}

inline constexpr std::size_t kMomentOrder = 128;
inline constexpr double kMomentTolerance = 1e-8;

namespace detail {

// Integral of f(x, y) exp(-x^2/sx^2 - y^2/sy^2) with f returning four values,
// at `order` nodes per axis.
template <class F>
std::array<double, 4> gaussian_weighted(const F& f, double sx, double sy, std::size_t order) {
  const auto& r = gauss_hermite(order);
  std::array<double, 4> sum{};
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; b < r.size(); ++b) {
      const auto v = f(sx * r.nodes[a], sy * r.nodes[b]);
      const double w = r.weights[a] * r.weights[b];
      for (std::size_t k = 0; k < 4; ++k) sum[k] += w * v[k];
    }
  for (auto& s : sum) s *= sx * sy;
  return sum;
}

// Runs at kMomentOrder and twice that; the means are judged against the
// second-moment scale since they vanish by parity.
template <class F>
QuadratureMoments certified_moments(const F& f, double sx, double sy, const char* what) {
  const auto lo = gaussian_weighted(f, sx, sy, kMomentOrder);
  const auto hi = gaussian_weighted(f, sx, sy, 2 * kMomentOrder);
  const double scale_x = std::abs(hi[2]), scale_y = std::abs(hi[3]);
  const std::array<double, 4> scale = {scale_x, scale_y, scale_x, scale_y};
  for (std::size_t k = 0; k < 4; ++k) {
    const double rel = std::abs(hi[k] - lo[k]) / std::max(scale[k], 1e-300);
    if (!(rel <= kMomentTolerance))
      throw NonConvergence(std::string(what) + ": order doubling changed a moment by relative " + std::to_string(rel));
  }
  return {hi[0], hi[1], hi[2], hi[3]};
}

}  // namespace detail

inline QuadratureMoments position_moments(const Wavefunction& psi) {
  const Polynomial2& P = psi.polynomial();
  const double n2 = psi.norm() * psi.norm();
  auto f = [&](double x, double y) {
    const double rho = n2 * std::norm(P(x, y));
    return std::array<double, 4>{rho * x, rho * y, rho * x * x, rho * y * y};
  };
  return detail::certified_moments(f, psi.sigma_x(), psi.sigma_y(), "position_moments");
}

inline QuadratureMoments momentum_moments(const Wavefunction& psi) {
  const Polynomial2& P = psi.polynomial();
  const double sx = psi.sigma_x(), sy = psi.sigma_y();
  // d/dx [P g] = (dP/dx - x P / sx^2) g
  const Polynomial2 Qx = P.d_dx() + P.times_linear(-1.0 / (sx * sx), 0.0);
  const Polynomial2 Qy = P.d_dy() + P.times_linear(0.0, -1.0 / (sy * sy));
  const double n2 = psi.norm() * psi.norm();
  auto f = [&](double x, double y) {
    const complex p = P(x, y), qx = Qx(x, y), qy = Qy(x, y);
    const complex i(0.0, 1.0);
    return std::array<double, 4>{n2 * (-i * std::conj(p) * qx).real(), n2 * (-i * std::conj(p) * qy).real(),
                                 n2 * std::norm(qx), n2 * std::norm(qy)};
  };
  return detail::certified_moments(f, sx, sy, "momentum_moments");
}

inline QuadratureMoments position_moments(const QevParams& p, SpatialForm form = SpatialForm::given_eta) {
  return position_moments(wavefunction(p, form));
}

inline QuadratureMoments momentum_moments(const QevParams& p, SpatialForm form = SpatialForm::given_eta) {
  return momentum_moments(wavefunction(p, form));
}

inline UncertaintyReport uncertainty_report(const Wavefunction& psi) {
  return make_uncertainty_report(position_moments(psi), momentum_moments(psi));
}

inline UncertaintyReport uncertainty_report(const QevParams& p, SpatialForm form = SpatialForm::given_eta) {
  return uncertainty_report(wavefunction(p, form));
}

/// Uncertainties read off the closed-form Wigner function as a phase-space
/// distribution. Differs from the wavefunction route wherever the closed form
/// differs from the true Wigner function.
inline UncertaintyReport closed_form_uncertainty_report(const QevParams& p) {
  const ClosedFormWigner w(p);
  std::array<double, 8> m{};
  auto component = [&](std::size_t k) {
    return w.expectation([k](const PhasePoint& pt) {
      switch (k) {
        case 0: return pt.x;
        case 1: return pt.y;
        case 2: return pt.x * pt.x;
        case 3: return pt.y * pt.y;
        case 4: return pt.px;
        case 5: return pt.py;
        case 6: return pt.px * pt.px;
        default: return pt.py * pt.py;
      }
    });
  };
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = component(k);
  return make_uncertainty_report({m[0], m[1], m[2], m[3]}, {m[4], m[5], m[6], m[7]});
}

struct FockMoments {
  QuadratureMoments position;
  QuadratureMoments momentum;
};

/// Moments of x = (a + a+)/sqrt2 and p = i(a+ - a)/sqrt2 on a truncated two-mode
/// vector. Second moments are ||X psi||^2 with X psi kept one level past the
/// cutoff, which is exact for the truncated vector.
inline FockMoments fock_moments_oracle(const TwoModeFockVector& vec) {
  if (vec.tail_mass > kMaxTailMass)
    throw TruncationError("fock_moments_oracle: tail mass " + std::to_string(vec.tail_mass) + " exceeds 1e-10");
  const Eigen::MatrixXcd& A = vec.amplitudes;
  const Eigen::Index na = A.rows(), nb = A.cols();
  const complex i(0.0, 1.0);

  // lowered(n) = sqrt(n+1) A(n+1), raised(n) = sqrt(n) A(n-1), along rows (mode a)
  Eigen::MatrixXcd low_a = Eigen::MatrixXcd::Zero(na + 1, nb), up_a = Eigen::MatrixXcd::Zero(na + 1, nb);
  for (Eigen::Index n = 0; n + 1 < na; ++n) low_a.row(n) = std::sqrt(n + 1.0) * A.row(n + 1);
  for (Eigen::Index n = 1; n <= na; ++n) up_a.row(n) = std::sqrt(static_cast<double>(n)) * A.row(n - 1);
  Eigen::MatrixXcd low_b = Eigen::MatrixXcd::Zero(na, nb + 1), up_b = Eigen::MatrixXcd::Zero(na, nb + 1);
  for (Eigen::Index n = 0; n + 1 < nb; ++n) low_b.col(n) = std::sqrt(n + 1.0) * A.col(n + 1);
  for (Eigen::Index n = 1; n <= nb; ++n) up_b.col(n) = std::sqrt(static_cast<double>(n)) * A.col(n - 1);

  const Eigen::MatrixXcd xa = (low_a + up_a) / std::numbers::sqrt2;
  const Eigen::MatrixXcd pa = i * (up_a - low_a) / std::numbers::sqrt2;
  const Eigen::MatrixXcd xb = (low_b + up_b) / std::numbers::sqrt2;
  const Eigen::MatrixXcd pb = i * (up_b - low_b) / std::numbers::sqrt2;

  auto mean_a = [&](const Eigen::MatrixXcd& op) { return (A.conjugate().cwiseProduct(op.topRows(na))).sum().real(); };
  auto mean_b = [&](const Eigen::MatrixXcd& op) { return (A.conjugate().cwiseProduct(op.leftCols(nb))).sum().real(); };

  FockMoments out;
  out.position = {mean_a(xa), mean_b(xb), xa.squaredNorm(), xb.squaredNorm()};
  out.momentum = {mean_a(pa), mean_b(pb), pa.squaredNorm(), pb.squaredNorm()};
  return out;
}

}  // namespace qev
