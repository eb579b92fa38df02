#pragma once

// Wigner functions of the vortex state: the printed closed form (Gaussian times
// an associated Laguerre polynomial) and a direct numerical Wigner transform of
// the coordinate wavefunction, which serves as ground truth.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "qev/errors.hpp"
#include "qev/parallel.hpp"
#include "qev/quadrature.hpp"
#include "qev/specfun.hpp"
#include "qev/state.hpp"

namespace qev {

struct PhasePoint {
  double x = 0.0;
  double y = 0.0;
  double px = 0.0;
  double py = 0.0;

  PhasePoint operator-() const { return {-x, -y, -px, -py}; }
};

enum class WignerMethod { closed_form, numeric };

// ---------------------------------------------------------------------------
// Closed form

/// exp(-(X1^2 + Y1^2 + PX1^2 + PY1^2)) * L_m^{-1/2}((PX2 + PY2 - X2 - Y2)^2 / (sx^2 + sy^2))
/// in the scaled variables X1 = x/sx, Y1 = y/sy, PX1 = sx px/sqrt2, PY1 = sy py/sqrt2,
/// X2 = sy x/(2 sx), Y2 = sx y/(2 sy), PX2 = sy^3 px/sqrt2, PY2 = sx^3 py/sqrt2.
/// The printed prefactor is replaced by the constant that makes the phase-space
/// integral exactly one.
class ClosedFormWigner {
 public:
  explicit ClosedFormWigner(const QevParams& p) : m_(p.m) {
    p.validate();
    const DerivedParams d = derive(p);
    sx_ = d.sigma_x;
    sy_ = d.sigma_y;
    const double integral = integrate_unnormalized([](const PhasePoint&) { return 1.0; });
    if (integral == 0.0 || !std::isfinite(integral))
      throw std::domain_error("ClosedFormWigner: shape integrates to " + std::to_string(integral));
    prefactor_ = 1.0 / integral;
  }

  double operator()(const PhasePoint& pt) const { return prefactor_ * shape(pt); }

  /// Unnormalized Gaussian-times-Laguerre factor.
  double shape(const PhasePoint& pt) const {
    const double X1 = pt.x / sx_, Y1 = pt.y / sy_;
    const double PX1 = sx_ * pt.px / std::numbers::sqrt2, PY1 = sy_ * pt.py / std::numbers::sqrt2;
    return std::exp(-(X1 * X1 + Y1 * Y1 + PX1 * PX1 + PY1 * PY1)) * laguerre_arg_poly(pt);
  }

  double prefactor() const { return prefactor_; }

  /// K as printed: 2^(m-4) m! / (pi sqrt(pi) Gamma(m+1/2)) [-2 (sx^2 + sy^2)]^m.
  double printed_prefactor() const {
    const double mag = std::exp((m_ - 4.0) * std::numbers::ln2 + log_factorial(m_) - log_gamma(m_ + 0.5) +
                                m_ * std::log(2.0 * (sx_ * sx_ + sy_ * sy_))) /
                       (std::numbers::pi * std::sqrt(std::numbers::pi));
    return (m_ % 2) ? -mag : mag;
  }

  /// Integral of f(pt) W(pt) over phase space. Exact for f polynomial of degree
  /// <= 14 in the coordinates (tensor Gauss-Hermite in the scaled variables).
  template <class F>
  double expectation(F&& f) const {
    return prefactor_ * integrate_unnormalized(std::forward<F>(f));
  }

  unsigned m() const { return m_; }
  double sigma_x() const { return sx_; }
  double sigma_y() const { return sy_; }

 private:
  double laguerre_arg_poly(const PhasePoint& pt) const {
    const double X2 = sy_ * pt.x / (2.0 * sx_), Y2 = sx_ * pt.y / (2.0 * sy_);
    const double PX2 = sy_ * sy_ * sy_ * pt.px / std::numbers::sqrt2;
    const double PY2 = sx_ * sx_ * sx_ * pt.py / std::numbers::sqrt2;
    const double z = PX2 + PY2 - X2 - Y2;
    return laguerre_assoc(m_, -0.5, z * z / (sx_ * sx_ + sy_ * sy_));
  }

  template <class F>
  double integrate_unnormalized(F&& f) const {
    const auto& rule = gauss_hermite(m_ + 8);
    const std::size_t n = rule.size();
    // dx dy dpx dpy = 2 dX1 dY1 dPX1 dPY1
    double sum = 0.0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t d = 0; d < n; ++d) {
            const PhasePoint pt{sx_ * rule.nodes[a], sy_ * rule.nodes[b], std::numbers::sqrt2 * rule.nodes[c] / sx_,
                                std::numbers::sqrt2 * rule.nodes[d] / sy_};
            sum += rule.weights[a] * rule.weights[b] * rule.weights[c] * rule.weights[d] * laguerre_arg_poly(pt) *
                   f(pt);
          }
    return 2.0 * sum;
  }

  unsigned m_;
  double sx_ = 1.0;
  double sy_ = 1.0;
  double prefactor_ = 1.0;
};

inline double wigner_closed_form(const QevParams& p, const PhasePoint& pt) { return ClosedFormWigner(p)(pt); }

// ---------------------------------------------------------------------------
// Numerical transform

/// W(x, y, px, py) = pi^-2 * integral Psi*(x+u, y+v) Psi(x-u, y-v) exp(2i(px u + py v)) du dv
/// at fixed (x, y), by tensor Gauss-Hermite in u = sx t, v = sy s. The
/// momentum-independent part is tabulated once so many (px, py) are cheap.
class WignerTransform {
 public:
  WignerTransform(const Wavefunction& psi, double x, double y, std::size_t order)
      : rule_(&gauss_hermite(order)), sx_(psi.sigma_x()), sy_(psi.sigma_y()) {
    const auto& r = *rule_;
    const std::size_t n = r.size();
    table_.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    const Polynomial2& poly = psi.polynomial();
    for (std::size_t i = 0; i < n; ++i) {
      const double u = sx_ * r.nodes[i];
      for (std::size_t j = 0; j < n; ++j) {
        const double v = sy_ * r.nodes[j];
        table_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            r.weights[i] * r.weights[j] * std::conj(poly(x + u, y + v)) * poly(x - u, y - v);
      }
    }
    scale_ = psi.norm() * psi.norm() * sx_ * sy_ / (std::numbers::pi * std::numbers::pi) *
             std::exp(-x * x / (sx_ * sx_) - y * y / (sy_ * sy_));
  }

  double operator()(double px, double py) const {
    const Eigen::VectorXcd ex = phases(px, sx_);
    const Eigen::VectorXcd ey = phases(py, sy_);
    return scale_ * (ex.transpose() * table_ * ey).value().real();
  }

  /// values(a, b) = W(px[a], py[b]).
  Eigen::MatrixXd evaluate(const std::vector<double>& px, const std::vector<double>& py) const {
    const auto n = table_.rows();
    Eigen::MatrixXcd ex(static_cast<Eigen::Index>(px.size()), n);
    Eigen::MatrixXcd ey(n, static_cast<Eigen::Index>(py.size()));
    for (std::size_t a = 0; a < px.size(); ++a) ex.row(static_cast<Eigen::Index>(a)) = phases(px[a], sx_).transpose();
    for (std::size_t b = 0; b < py.size(); ++b) ey.col(static_cast<Eigen::Index>(b)) = phases(py[b], sy_);
    return scale_ * (ex * table_ * ey).real();
  }

 private:
  Eigen::VectorXcd phases(double p, double s) const {
    const auto& r = *rule_;
    Eigen::VectorXcd e(static_cast<Eigen::Index>(r.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
      e(static_cast<Eigen::Index>(i)) = std::polar(1.0, 2.0 * p * s * r.nodes[i]);
    return e;
  }

  const HermiteRule* rule_;
  double sx_;
  double sy_;
  double scale_ = 1.0;
  Eigen::MatrixXcd table_;
};

inline constexpr std::size_t kWignerOrder = 96;
inline constexpr double kWignerTolerance = 1e-6;

/// Numerical Wigner function at fixed position, checked against a transform
/// with twice the nodes.
class NumericWigner {
 public:
  NumericWigner(const Wavefunction& psi, double x, double y)
      : coarse_(psi, x, y, kWignerOrder), fine_(psi, x, y, 2 * kWignerOrder) {}

  double operator()(double px, double py) const {
    const double a = coarse_(px, py);
    const double b = fine_(px, py);
    check(std::abs(a - b));
    return b;
  }

  Eigen::MatrixXd evaluate(const std::vector<double>& px, const std::vector<double>& py) const {
    const Eigen::MatrixXd a = coarse_.evaluate(px, py);
    Eigen::MatrixXd b = fine_.evaluate(px, py);
    check((a - b).cwiseAbs().maxCoeff());
    return b;
  }

 private:
  static void check(double diff) {
    if (!(diff <= kWignerTolerance))
      throw NonConvergence("wigner_numeric: node doubling changed the value by " + std::to_string(diff));
  }

  WignerTransform coarse_;
  WignerTransform fine_;
};

inline double wigner_numeric(const Wavefunction& psi, const PhasePoint& pt) {
  return NumericWigner(psi, pt.x, pt.y)(pt.px, pt.py);
}

inline double wigner_numeric(const QevParams& p, const PhasePoint& pt, SpatialForm form = SpatialForm::given_eta) {
  return wigner_numeric(wavefunction(p, form), pt);
}

/// Integral of the numerical W over (px, py) at fixed (x, y); equals |Psi(x, y)|^2
/// for an exact transform. Momentum nodes are scaled by 1/sigma so the
/// Gaussian-times-polynomial dependence is integrated exactly.
inline double wigner_position_marginal(const Wavefunction& psi, double x, double y, std::size_t order = 32) {
  const auto& r = gauss_hermite(order);
  std::vector<double> px(r.size()), py(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    px[i] = r.nodes[i] / psi.sigma_x();
    py[i] = r.nodes[i] / psi.sigma_y();
  }
  const Eigen::MatrixXd w = NumericWigner(psi, x, y).evaluate(px, py);
  double sum = 0.0;
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; b < r.size(); ++b)
      sum += r.weights[a] * r.weights[b] * std::exp(r.nodes[a] * r.nodes[a] + r.nodes[b] * r.nodes[b]) *
             w(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  return sum / (psi.sigma_x() * psi.sigma_y());
}

// ---------------------------------------------------------------------------
// Grids

enum class PhaseAxis { x, y, px, py };

inline const char* to_string(PhaseAxis a) {
  switch (a) {
    case PhaseAxis::x: return "x";
    case PhaseAxis::y: return "y";
    case PhaseAxis::px: return "px";
    case PhaseAxis::py: return "py";
  }
  return "?";
}

inline double& coordinate(PhasePoint& pt, PhaseAxis a) {
  switch (a) {
    case PhaseAxis::x: return pt.x;
    case PhaseAxis::y: return pt.y;
    case PhaseAxis::px: return pt.px;
    case PhaseAxis::py: return pt.py;
  }
  throw std::invalid_argument("unknown phase axis");
}

struct PhaseGridRequest {
  PhaseAxis first = PhaseAxis::x;
  PhaseAxis second = PhaseAxis::px;
  std::vector<double> first_axis;
  std::vector<double> second_axis;
  PhasePoint fixed;  // values of the two held coordinates; the varied ones are ignored
  WignerMethod method = WignerMethod::numeric;
  SpatialForm form = SpatialForm::given_eta;  // wavefunction used by the numeric method
  std::size_t workers = default_workers();
};

struct PhaseGrid {
  PhaseAxis first = PhaseAxis::x;
  PhaseAxis second = PhaseAxis::px;
  PhasePoint fixed;
  std::vector<double> first_axis;
  std::vector<double> second_axis;
  Eigen::MatrixXd values;  // values(i, j) at (first_axis[i], second_axis[j])
};

inline PhaseGrid wigner_grid(const QevParams& p, const PhaseGridRequest& req) {
  if (req.first == req.second) throw std::invalid_argument("wigner_grid: plane needs two distinct coordinates");
  if (req.first_axis.size() < 2 || req.second_axis.size() < 2)
    throw std::invalid_argument("wigner_grid: each axis needs at least 2 samples");

  PhaseGrid grid;
  grid.first = req.first;
  grid.second = req.second;
  grid.fixed = req.fixed;
  grid.first_axis = req.first_axis;
  grid.second_axis = req.second_axis;
  const auto n1 = req.first_axis.size(), n2 = req.second_axis.size();
  grid.values.resize(static_cast<Eigen::Index>(n1), static_cast<Eigen::Index>(n2));

  auto point = [&](std::size_t i, std::size_t j) {
    PhasePoint pt = req.fixed;
    coordinate(pt, req.first) = req.first_axis[i];
    coordinate(pt, req.second) = req.second_axis[j];
    return pt;
  };

  if (req.method == WignerMethod::closed_form) {
    const ClosedFormWigner w(p);
    parallel_for(n1, req.workers, [&](std::size_t i) {
      for (std::size_t j = 0; j < n2; ++j)
        grid.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = w(point(i, j));
    });
    return grid;
  }

  const Wavefunction psi = wavefunction(p, req.form);
  // One transform per distinct position; momenta along the row come cheaply.
  parallel_for(n1, req.workers, [&](std::size_t i) {
    const bool position_varies_with_j = req.second == PhaseAxis::x || req.second == PhaseAxis::y;
    if (!position_varies_with_j) {
      const PhasePoint base = point(i, 0);
      const NumericWigner w(psi, base.x, base.y);
      for (std::size_t j = 0; j < n2; ++j) {
        const PhasePoint pt = point(i, j);
        grid.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = w(pt.px, pt.py);
      }
    } else {
      for (std::size_t j = 0; j < n2; ++j) {
        const PhasePoint pt = point(i, j);
        grid.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = wigner_numeric(psi, pt);
      }
    }
  });
  return grid;
}

// ---------------------------------------------------------------------------
// Closed form vs transform

struct WignerDiscrepancy {
  double max_abs_diff = 0.0;
  PhasePoint worst;
  double closed_at_origin = 0.0;
  double numeric_at_origin = 0.0;
  double prefactor_ratio = 0.0;  // normalized prefactor / printed prefactor
};

/// Compares the closed form with the transform of the coordinate-consistent
/// wavefunction on a 5^4 lattice at {0, +-0.75, +-1.5} widths per axis.
inline WignerDiscrepancy closed_form_discrepancy(const QevParams& p, std::size_t workers = default_workers()) {
  const ClosedFormWigner closed(p);
  const Wavefunction psi = wavefunction(p, SpatialForm::coordinate_consistent);
  const DerivedParams d = derive(p);
  constexpr std::array<double, 5> steps = {-1.5, -0.75, 0.0, 0.75, 1.5};
  std::vector<double> px, py;
  for (double s : steps) {
    px.push_back(s / d.sigma_x);
    py.push_back(s / d.sigma_y);
  }
  std::vector<WignerDiscrepancy> per_position(steps.size() * steps.size());
  parallel_for(per_position.size(), workers, [&](std::size_t k) {
    const double x = steps[k / steps.size()] * d.sigma_x;
    const double y = steps[k % steps.size()] * d.sigma_y;
    const Eigen::MatrixXd w = NumericWigner(psi, x, y).evaluate(px, py);
    WignerDiscrepancy& out = per_position[k];
    for (std::size_t a = 0; a < px.size(); ++a)
      for (std::size_t b = 0; b < py.size(); ++b) {
        const PhasePoint pt{x, y, px[a], py[b]};
        const double diff = std::abs(closed(pt) - w(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)));
        if (diff > out.max_abs_diff) {
          out.max_abs_diff = diff;
          out.worst = pt;
        }
      }
  });
  WignerDiscrepancy result;
  for (const auto& r : per_position)
    if (r.max_abs_diff > result.max_abs_diff) {
      result.max_abs_diff = r.max_abs_diff;
      result.worst = r.worst;
    }
  result.closed_at_origin = closed(PhasePoint{});
  result.numeric_at_origin = wigner_numeric(psi, PhasePoint{});
  result.prefactor_ratio = closed.prefactor() / closed.printed_prefactor();
  return result;
}

}  // namespace qev
