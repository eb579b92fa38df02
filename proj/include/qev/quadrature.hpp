#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qev/errors.hpp"

namespace qev {

/// Nodes and weights for the integral of f(t) exp(-t^2) over the real line.
struct HermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

namespace detail {

// Newton iteration on the orthonormal Hermite recurrence, started from the
// eigenvalues of the Jacobi matrix.
inline HermiteRule compute_hermite_rule(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_hermite: order must be positive");
  constexpr double kPiM4 = 0.7511255444649425;  // pi^(-1/4)
  constexpr double kEps = 1e-14;
  constexpr int kMaxIt = 100;

  HermiteRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const double dn = static_cast<double>(n);
  const std::size_t half = (n + 1) / 2;

  std::vector<double> guess(n, 0.0);
  if (n > 1) {
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    Eigen::VectorXd sub(static_cast<Eigen::Index>(n - 1));
    for (std::size_t k = 1; k < n; ++k) sub(static_cast<Eigen::Index>(k - 1)) = std::sqrt(k / 2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    for (std::size_t k = 0; k < n; ++k) guess[k] = solver.eigenvalues()(static_cast<Eigen::Index>(n - 1 - k));
  }

  for (std::size_t i = 0; i < half; ++i) {
    double z = guess[i];
    double pp = 0.0;
    int it = 0;
    for (; it < kMaxIt; ++it) {
      double p1 = kPiM4;
      double p2 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        const double dj = static_cast<double>(j);
        p1 = z * std::sqrt(2.0 / (dj + 1.0)) * p2 - std::sqrt(dj / (dj + 1.0)) * p3;
      }
      pp = std::sqrt(2.0 * dn) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= kEps * std::max(1.0, std::abs(z))) break;
    }
    if (it == kMaxIt) throw NonConvergence("gauss_hermite: Newton iteration failed for order " + std::to_string(n));
    rule.nodes[i] = z;
    rule.nodes[n - 1 - i] = -z;
    rule.weights[i] = rule.weights[n - 1 - i] = 2.0 / (pp * pp);
  }
  if (n % 2 == 1) rule.nodes[half - 1] = 0.0;
  return rule;
}

}  // namespace detail

/// Gauss-Hermite rule of the given order; computed once per order and shared.
inline const HermiteRule& gauss_hermite(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<const HermiteRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const HermiteRule>(detail::compute_hermite_rule(n));
  return *slot;
}

}  // namespace qev
