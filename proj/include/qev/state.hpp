#pragma once

// Quantum elliptical vortex states: the parameter record, the coordinate-space
// wavefunction (polynomial times Gaussian) and the truncated two-mode Fock
// expansion.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "qev/errors.hpp"
#include "qev/quadrature.hpp"
#include "qev/specfun.hpp"

namespace qev {

using complex = std::complex<double>;

inline complex ipow(complex z, unsigned n) {
  complex r = 1.0;
  for (unsigned i = 0; i < n; ++i) r *= z;
  return r;
}

struct QevParams {
  unsigned m = 1;      // vorticity
  double eta_x = 1.0;  // ellipticity weights
  double eta_y = 1.0;
  double zeta_x = 0.0;  // squeezing parameters
  double zeta_y = 0.0;

  void validate() const {
    if (!(eta_x > 0.0) || !std::isfinite(eta_x)) throw std::invalid_argument("QevParams: eta_x must be positive");
    if (!(eta_y > 0.0) || !std::isfinite(eta_y)) throw std::invalid_argument("QevParams: eta_y must be positive");
    if (!std::isfinite(zeta_x) || !std::isfinite(zeta_y)) throw std::invalid_argument("QevParams: zeta must be finite");
  }

  bool operator==(const QevParams&) const = default;
};

struct DerivedParams {
  double sigma_x;  // exp(2 zeta_x)
  double sigma_y;
  double xi_x;  // tanh(2 zeta_x)
  double xi_y;
};

inline DerivedParams derive(const QevParams& p) {
  return {std::exp(2.0 * p.zeta_x), std::exp(2.0 * p.zeta_y), std::tanh(2.0 * p.zeta_x), std::tanh(2.0 * p.zeta_y)};
}

inline double zeta_from_sigma(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  return 0.5 * std::log(sigma);
}

/// eta = 1 / (sqrt(2) sigma), the coupling under which the Gaussian widths and
/// the vortex polynomial share the same scaled coordinates.
inline double coordinate_eta(double sigma) { return 1.0 / (std::numbers::sqrt2 * sigma); }

namespace presets {

/// Uncertainty-study regime: zeta_y = ln5/4 + zeta_x (sigma_y = sqrt(5) sigma_x)
/// and eta_i = 1/(sqrt(2) sigma_i).
inline QevParams section_two(unsigned m, double sigma_x) {
  QevParams p;
  p.m = m;
  p.zeta_x = zeta_from_sigma(sigma_x);
  p.zeta_y = std::log(5.0) / 4.0 + p.zeta_x;
  p.eta_x = coordinate_eta(std::exp(2.0 * p.zeta_x));
  p.eta_y = coordinate_eta(std::exp(2.0 * p.zeta_y));
  return p;
}

/// Entropy-study regime: fixed widths (default sigma_x = 5, sigma_y = 3) and
/// eta_y = 1/(sqrt(2) eta_x).
inline QevParams section_three(unsigned m, double eta_x, double sigma_x = 5.0, double sigma_y = 3.0) {
  QevParams p;
  p.m = m;
  p.eta_x = eta_x;
  p.eta_y = 1.0 / (std::numbers::sqrt2 * eta_x);
  p.zeta_x = zeta_from_sigma(sigma_x);
  p.zeta_y = zeta_from_sigma(sigma_y);
  return p;
}

/// Circular vortex with sigma_x = sigma_y = sigma and eta_x = eta_y = 1/(sqrt(2) sigma).
inline QevParams circular(unsigned m, double sigma) {
  QevParams p;
  p.m = m;
  p.zeta_x = p.zeta_y = zeta_from_sigma(sigma);
  p.eta_x = p.eta_y = coordinate_eta(sigma);
  return p;
}

}  // namespace presets

// ---------------------------------------------------------------------------
// Coordinate representation

/// Complex polynomial sum_{i,j} c_ij x^i y^j with i, j <= degree.
class Polynomial2 {
 public:
  Polynomial2() : Polynomial2(0) {}
  explicit Polynomial2(unsigned degree) : degree_(degree), coef_((degree + 1) * (degree + 1)) {}

  static Polynomial2 constant(complex c) {
    Polynomial2 p(0);
    p.at(0, 0) = c;
    return p;
  }

  unsigned degree() const { return degree_; }
  complex& at(unsigned i, unsigned j) { return coef_[i * (degree_ + 1) + j]; }
  const complex& at(unsigned i, unsigned j) const { return coef_[i * (degree_ + 1) + j]; }

  complex operator()(double x, double y) const {
    complex acc = 0.0;
    for (unsigned i = degree_ + 1; i-- > 0;) {
      complex row = 0.0;
      for (unsigned j = degree_ + 1; j-- > 0;) row = row * y + at(i, j);
      acc = acc * x + row;
    }
    return acc;
  }

  Polynomial2 d_dx() const {
    Polynomial2 r(degree_);
    for (unsigned i = 1; i <= degree_; ++i)
      for (unsigned j = 0; j <= degree_; ++j) r.at(i - 1, j) = static_cast<double>(i) * at(i, j);
    return r;
  }

  Polynomial2 d_dy() const {
    Polynomial2 r(degree_);
    for (unsigned i = 0; i <= degree_; ++i)
      for (unsigned j = 1; j <= degree_; ++j) r.at(i, j - 1) = static_cast<double>(j) * at(i, j);
    return r;
  }

  /// c_x * x * p + c_y * y * p
  Polynomial2 times_linear(complex cx, complex cy) const {
    Polynomial2 r(degree_ + 1);
    for (unsigned i = 0; i <= degree_; ++i)
      for (unsigned j = 0; j <= degree_; ++j) {
        r.at(i + 1, j) += cx * at(i, j);
        r.at(i, j + 1) += cy * at(i, j);
      }
    return r;
  }

  Polynomial2& operator+=(const Polynomial2& o) {
    if (o.degree_ > degree_) *this = widened(o.degree_);
    for (unsigned i = 0; i <= o.degree_; ++i)
      for (unsigned j = 0; j <= o.degree_; ++j) at(i, j) += o.at(i, j);
    return *this;
  }

  Polynomial2& operator*=(complex s) {
    for (auto& c : coef_) c *= s;
    return *this;
  }

  friend Polynomial2 operator+(Polynomial2 a, const Polynomial2& b) { return a += b; }
  friend Polynomial2 operator*(complex s, Polynomial2 p) { return p *= s; }

 private:
  Polynomial2 widened(unsigned degree) const {
    Polynomial2 r(degree);
    for (unsigned i = 0; i <= degree_; ++i)
      for (unsigned j = 0; j <= degree_; ++j) r.at(i, j) = at(i, j);
    return r;
  }

  unsigned degree_;
  std::vector<complex> coef_;
};

/// How the coordinate-space amplitude is built from a parameter record.
enum class SpatialForm {
  given_eta,              // (eta_x x - i eta_y y)^m times the squeezed Gaussian, eta as stored
  coordinate_consistent,  // same, with eta_i replaced by 1/(sqrt(2) sigma_i)
  fock_state,             // exact image of (eta_x a+ - i eta_y b+)^m on the squeezed vacuum
};

inline const char* to_string(SpatialForm f) {
  switch (f) {
    case SpatialForm::given_eta: return "given_eta";
    case SpatialForm::coordinate_consistent: return "coordinate_consistent";
    case SpatialForm::fock_state: return "fock_state";
  }
  return "?";
}

/// Psi(x, y) = norm * P(x, y) * exp(-x^2/(2 sigma_x^2) - y^2/(2 sigma_y^2)),
/// normalized numerically to unit L2 norm.
class Wavefunction {
 public:
  static constexpr std::size_t kNormOrder = 128;

  Wavefunction(Polynomial2 poly, double sigma_x, double sigma_y)
      : poly_(std::move(poly)), sigma_x_(sigma_x), sigma_y_(sigma_y) {
    if (!(sigma_x > 0.0) || !(sigma_y > 0.0)) throw std::invalid_argument("Wavefunction: widths must be positive");
    const double raw = raw_norm_squared();
    if (!(raw > 0.0) || !std::isfinite(raw)) throw std::domain_error("Wavefunction: polynomial has no finite norm");
    norm_ = 1.0 / std::sqrt(raw);
  }

  complex operator()(double x, double y) const { return norm_ * poly_(x, y) * gaussian(x, y); }
  double density(double x, double y) const { return std::norm((*this)(x, y)); }

  double gaussian(double x, double y) const {
    return std::exp(-0.5 * (x * x / (sigma_x_ * sigma_x_) + y * y / (sigma_y_ * sigma_y_)));
  }

  const Polynomial2& polynomial() const { return poly_; }
  double norm() const { return norm_; }
  double sigma_x() const { return sigma_x_; }
  double sigma_y() const { return sigma_y_; }

  /// Integral of |P|^2 exp(-x^2/sx^2 - y^2/sy^2) (unnormalized polynomial).
  double raw_norm_squared() const {
    const auto& rule = gauss_hermite(kNormOrder);
    double sum = 0.0;
    for (std::size_t a = 0; a < rule.size(); ++a) {
      double col = 0.0;
      for (std::size_t b = 0; b < rule.size(); ++b)
        col += rule.weights[b] * std::norm(poly_(sigma_x_ * rule.nodes[a], sigma_y_ * rule.nodes[b]));
      sum += rule.weights[a] * col;
    }
    return sum * sigma_x_ * sigma_y_;
  }

 private:
  Polynomial2 poly_;
  double sigma_x_;
  double sigma_y_;
  double norm_ = 1.0;
};

namespace detail {

// (cx x - i cy y)^m
inline Polynomial2 vortex_polynomial(unsigned m, double cx, double cy) {
  Polynomial2 p(m);
  for (unsigned k = 0; k <= m; ++k) {
    const complex w = binomial(m, k) * ipow(cx, m - k) * ipow(complex(0.0, -cy), k);
    p.at(m - k, k) = w;
  }
  return p;
}

// a+ acting on f(x) * exp(-x^2/(2 s^2)) maps the polynomial part to
// ((1 + 1/s^2) x f - df/dx) / sqrt(2); likewise for b+ in y.
inline Polynomial2 fock_image_polynomial(const QevParams& p, const DerivedParams& d) {
  const double cx = (1.0 + 1.0 / (d.sigma_x * d.sigma_x)) / std::numbers::sqrt2;
  const double cy = (1.0 + 1.0 / (d.sigma_y * d.sigma_y)) / std::numbers::sqrt2;
  const complex ax = p.eta_x;
  const complex ay = complex(0.0, -p.eta_y);
  Polynomial2 poly = Polynomial2::constant(1.0);
  for (unsigned step = 0; step < p.m; ++step) {
    Polynomial2 next = poly.times_linear(ax * cx, ay * cy);
    next += (-ax / std::numbers::sqrt2) * poly.d_dx();
    next += (-ay / std::numbers::sqrt2) * poly.d_dy();
    poly = std::move(next);
  }
  return poly;
}

}  // namespace detail

inline Wavefunction wavefunction(const QevParams& p, SpatialForm form = SpatialForm::given_eta) {
  p.validate();
  const DerivedParams d = derive(p);
  switch (form) {
    case SpatialForm::given_eta:
      return {detail::vortex_polynomial(p.m, p.eta_x, p.eta_y), d.sigma_x, d.sigma_y};
    case SpatialForm::coordinate_consistent:
      return {detail::vortex_polynomial(p.m, coordinate_eta(d.sigma_x), coordinate_eta(d.sigma_y)), d.sigma_x,
              d.sigma_y};
    case SpatialForm::fock_state:
      return {detail::fock_image_polynomial(p, d), d.sigma_x, d.sigma_y};
  }
  throw std::invalid_argument("wavefunction: unknown form");
}

inline complex wavefunction(const QevParams& p, double x, double y, SpatialForm form = SpatialForm::given_eta) {
  return wavefunction(p, form)(x, y);
}

/// Squared normalization constant printed for the coordinate-consistent state,
/// 2^(m-2) / (sigma_x sigma_y Gamma(m+1/2) sqrt(pi)).
inline double printed_norm_squared(const QevParams& p) {
  const DerivedParams d = derive(p);
  return std::exp((static_cast<double>(p.m) - 2.0) * std::numbers::ln2 - log_gamma(p.m + 0.5)) /
         (d.sigma_x * d.sigma_y * std::sqrt(std::numbers::pi));
}

/// (numeric normalization)^2 / (printed normalization)^2 for the
/// coordinate-consistent state; 1 would mean the printed constant is right.
inline double printed_norm_ratio(const QevParams& p) {
  const Wavefunction psi = wavefunction(p, SpatialForm::coordinate_consistent);
  return psi.norm() * psi.norm() / printed_norm_squared(p);
}

// ---------------------------------------------------------------------------
// Fock representation

inline constexpr double kMaxTailMass = 1e-10;
inline constexpr std::size_t kMaxAutoCutoff = 4096;

/// Pure two-mode state truncated to n_a, n_b < cutoff; amplitudes(n_a, n_b).
struct TwoModeFockVector {
  std::size_t cutoff = 0;
  Eigen::MatrixXcd amplitudes;
  double tail_mass = 0.0;

  complex amplitude(std::size_t na, std::size_t nb) const {
    if (na >= cutoff || nb >= cutoff) return 0.0;
    return amplitudes(static_cast<Eigen::Index>(na), static_cast<Eigen::Index>(nb));
  }
};

namespace detail {

// Components of exp((xi/2) c+^2) c+^j |0>, i.e. (xi/2)^l / l! * sqrt((j+2l)!) on |j+2l>,
// carried until they drop 40 e-folds below the peak.
inline std::vector<double> squeezed_factor(unsigned j, double xi) {
  std::vector<double> v(j + 1, 0.0);
  v[j] = std::exp(0.5 * log_factorial(j));
  if (xi == 0.0) return v;
  const double log_half_xi = std::log(std::abs(xi) / 2.0);
  double peak = std::log(v[j]);
  for (std::size_t l = 1;; ++l) {
    const double dl = static_cast<double>(l);
    const double lv = dl * log_half_xi - log_factorial(l) + 0.5 * log_factorial(j + 2 * l);
    peak = std::max(peak, lv);
    const double sign = (xi < 0.0 && l % 2 == 1) ? -1.0 : 1.0;
    v.push_back(0.0);
    v.push_back(sign * std::exp(lv));
    if (lv < peak - 40.0) break;
    // Not decayed by 16x the largest cutoff: |ln xi| < 1e-3, so any admissible
    // cutoff loses far more than the allowed tail.
    if (v.size() > 16 * kMaxAutoCutoff)
      throw TruncationError("fock_amplitudes: squeezing too strong for a cutoff <= " + std::to_string(kMaxAutoCutoff));
  }
  return v;
}

inline double overlap(const std::vector<double>& u, const std::vector<double>& v, std::size_t limit) {
  const std::size_t n = std::min({u.size(), v.size(), limit});
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += u[i] * v[i];
  return s;
}

class FockBuilder {
 public:
  explicit FockBuilder(const QevParams& p) : m_(p.m) {
    p.validate();
    const DerivedParams d = derive(p);
    for (unsigned k = 0; k <= m_; ++k) {
      weights_.push_back(binomial(m_, k) * ipow(p.eta_x, m_ - k) * ipow(complex(0.0, -p.eta_y), k));
    }
    for (unsigned j = 0; j <= m_; ++j) {
      fa_.push_back(squeezed_factor(j, d.xi_x));
      fb_.push_back(squeezed_factor(j, d.xi_y));
    }
    exact_norm2_ = norm_squared(std::numeric_limits<std::size_t>::max());
  }

  double norm_squared(std::size_t cutoff) const {
    complex s = 0.0;
    for (unsigned k = 0; k <= m_; ++k)
      for (unsigned q = 0; q <= m_; ++q) {
        const double oa = overlap(fa_[m_ - k], fa_[m_ - q], cutoff);
        const double ob = overlap(fb_[k], fb_[q], cutoff);
        s += weights_[k] * std::conj(weights_[q]) * oa * ob;
      }
    return s.real();
  }

  double tail_mass(std::size_t cutoff) const { return std::max(0.0, 1.0 - norm_squared(cutoff) / exact_norm2_); }

  TwoModeFockVector build(std::size_t cutoff) const {
    TwoModeFockVector out;
    out.cutoff = cutoff;
    out.tail_mass = tail_mass(cutoff);
    const auto n = static_cast<Eigen::Index>(cutoff);
    out.amplitudes = Eigen::MatrixXcd::Zero(n, n);
    for (unsigned k = 0; k <= m_; ++k) {
      const auto& va = fa_[m_ - k];
      const auto& vb = fb_[k];
      const Eigen::Index la = std::min<Eigen::Index>(n, static_cast<Eigen::Index>(va.size()));
      const Eigen::Index lb = std::min<Eigen::Index>(n, static_cast<Eigen::Index>(vb.size()));
      for (Eigen::Index i = 0; i < la; ++i) {
        if (va[i] == 0.0) continue;
        const complex wa = weights_[k] * va[i];
        for (Eigen::Index j = 0; j < lb; ++j) out.amplitudes(i, j) += wa * vb[j];
      }
    }
    out.amplitudes /= std::sqrt(out.amplitudes.squaredNorm());
    return out;
  }

 private:
  unsigned m_;
  std::vector<complex> weights_;
  std::vector<std::vector<double>> fa_;
  std::vector<std::vector<double>> fb_;
  double exact_norm2_ = 1.0;
};

}  // namespace detail

/// Truncated Fock expansion at a fixed per-mode cutoff. Throws TruncationError
/// when more than 1e-10 of the norm lies beyond the cutoff.
inline TwoModeFockVector fock_amplitudes(const QevParams& p, std::size_t cutoff) {
  if (cutoff < p.m + 1) throw std::invalid_argument("fock_amplitudes: cutoff must be >= m + 1");
  const detail::FockBuilder builder(p);
  const double tail = builder.tail_mass(cutoff);
  if (tail > kMaxTailMass)
    throw TruncationError("fock_amplitudes: tail mass " + std::to_string(tail) + " at cutoff " +
                          std::to_string(cutoff));
  return builder.build(cutoff);
}

/// Cutoff chosen automatically: m + 16, doubled until the tail is small enough.
inline TwoModeFockVector fock_amplitudes(const QevParams& p) {
  const detail::FockBuilder builder(p);
  for (std::size_t n = p.m + 16; n <= kMaxAutoCutoff; n *= 2) {
    if (builder.tail_mass(n) < kMaxTailMass) return builder.build(n);
  }
  throw TruncationError("fock_amplitudes: no cutoff <= " + std::to_string(kMaxAutoCutoff) +
                        " keeps the tail mass below 1e-10");
}

}  // namespace qev
