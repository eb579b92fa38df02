#pragma once

// Special functions used by the vortex-state formulas: log-gamma, binomial
// coefficients, associated Laguerre polynomials and the Gauss hypergeometric
// series on [0, 1).

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "qev/errors.hpp"

namespace qev {

/// Termination control for power series.
struct SeriesControl {
  double rel_tol = 1e-16;
  std::size_t max_terms = 1'000'000;

  void validate() const {
    if (!(rel_tol > 0.0)) throw std::invalid_argument("SeriesControl: rel_tol must be > 0");
    if (max_terms < 1) throw std::invalid_argument("SeriesControl: max_terms must be >= 1");
  }
};

/// ln Gamma(x) for x > 0 (Lanczos approximation, g = 671/128, 14 terms).
/// Kept local rather than std::lgamma, which writes the global signgam.
inline double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("log_gamma: argument must be positive and finite");
  static constexpr std::array<double, 14> cof = {
      57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
      -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
      -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
      .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
      -.261908384015814087e-4, .368991826595316234e-5};
  double y = x;
  double tmp = x + 5.24218750000000000;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (double c : cof) ser += c / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

inline double log_factorial(std::uint64_t n) {
  if (n < 2) return 0.0;
  return log_gamma(static_cast<double>(n) + 1.0);
}

/// ln C(m, k).
inline double log_binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) throw std::domain_error("binomial: k > m");
  if (k == 0 || k == m) return 0.0;
  return log_factorial(m) - log_factorial(k) - log_factorial(m - k);
}

/// C(m, k). Integer arithmetic (then one rounding to double) up to m = 60,
/// log space beyond.
inline double binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) throw std::domain_error("binomial: k > m");
  if (m <= 60) {
    if (k > m - k) k = m - k;
    std::uint64_t r = 1;
    // r * (m - i) stays below 2^64 for m <= 60 and is always divisible by (i + 1).
    for (std::uint64_t i = 0; i < k; ++i) r = r * (m - i) / (i + 1);
    return static_cast<double>(r);
  }
  const double lb = log_binomial(m, k);
  if (lb > std::log(std::numeric_limits<double>::max()))
    throw std::overflow_error("binomial: C(" + std::to_string(m) + ", " + std::to_string(k) + ") overflows double");
  return std::exp(lb);
}

/// Associated Laguerre polynomial L_m^alpha(x) by the three-term recurrence.
inline double laguerre_assoc(unsigned m, double alpha, double x) {
  double prev = 1.0;
  if (m == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (unsigned n = 1; n < m; ++n) {
    const double next = ((2.0 * n + 1.0 + alpha - x) * cur - (n + alpha) * prev) / (n + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

inline constexpr double kMaxHypergeometricArgument = 1.0 - 1e-6;

/// 2F1(a, b; c; z) by partial sums of the defining series, 0 <= z <= 1 - 1e-6.
/// Stops once the next term falls below rel_tol * |partial sum|.
inline double gauss_2f1(double a, double b, double c, double z, const SeriesControl& ctl = {}) {
  ctl.validate();
  if (c <= 0.0 && c == std::floor(c)) throw std::domain_error("gauss_2f1: c is a nonpositive integer");
  if (!(z >= 0.0 && z <= kMaxHypergeometricArgument))
    throw std::domain_error("gauss_2f1: z = " + std::to_string(z) + " outside [0, 1 - 1e-6]");

  double sum = 1.0;
  double comp = 0.0;  // Neumaier compensation
  double term = 1.0;
  for (std::size_t n = 0; n < ctl.max_terms; ++n) {
    const double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    const double partial = sum + comp;
    if (std::abs(term) < ctl.rel_tol * std::abs(partial)) return partial;
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  throw NonConvergence("gauss_2f1: series did not converge within " + std::to_string(ctl.max_terms) +
                       " terms (z = " + std::to_string(z) + ")");
}

}  // namespace qev
