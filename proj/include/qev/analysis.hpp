#pragma once

// Parameter sweeps, the ellipticity optimizer, Araki-Lieb regions and the
// cross-validation report.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qev/entropy.hpp"
#include "qev/errors.hpp"
#include "qev/moments.hpp"
#include "qev/parallel.hpp"
#include "qev/state.hpp"
#include "qev/wigner.hpp"

namespace qev {

enum class SweepVariable { sigma_x, eta_x };
enum class Preset { section2, section3, custom };

inline const char* to_string(SweepVariable v) { return v == SweepVariable::sigma_x ? "sigma_x" : "eta_x"; }

inline const char* to_string(Preset p) {
  switch (p) {
    case Preset::section2: return "section2";
    case Preset::section3: return "section3";
    case Preset::custom: return "custom";
  }
  return "?";
}

/// A one-dimensional sweep. `base` holds the parameters that the swept variable
/// and the preset coupling do not overwrite:
///   section2, sigma_x: zeta_x = ln(sigma_x)/2, zeta_y = zeta_x + ln5/4, eta_i = 1/(sqrt2 sigma_i)
///   section3, eta_x:   eta_y = 1/(sqrt2 eta_x), widths from base
///   custom:            only the swept variable changes.
/// sigma_x grids are uniform, eta_x grids are uniform in log(eta_x).
struct SweepSpec {
  SweepVariable variable = SweepVariable::sigma_x;
  double lo = 1.0;
  double hi = 10.0;
  std::size_t steps = 64;
  std::vector<unsigned> m_list{1};
  Preset preset = Preset::section2;
  QevParams base = presets::section_two(1, 1.0);
  std::size_t workers = default_workers();

  static SweepSpec section_two(std::vector<unsigned> m_list) {
    SweepSpec s;
    s.m_list = std::move(m_list);
    return s;
  }

  static SweepSpec section_three(std::vector<unsigned> m_list) {
    SweepSpec s;
    s.variable = SweepVariable::eta_x;
    s.lo = 0.05;
    s.hi = 20.0;
    s.steps = 256;
    s.m_list = std::move(m_list);
    s.preset = Preset::section3;
    s.base = presets::section_three(1, 1.0);
    return s;
  }

  void validate() const {
    if (!(lo > 0.0) || !std::isfinite(hi) || !(lo < hi))
      throw std::invalid_argument("SweepSpec: need 0 < lo < hi");
    if (steps < 2) throw std::invalid_argument("SweepSpec: steps must be >= 2");
    if (m_list.empty()) throw std::invalid_argument("SweepSpec: m list is empty");
    if (preset == Preset::section2 && variable != SweepVariable::sigma_x)
      throw std::invalid_argument("SweepSpec: the section2 preset sweeps sigma_x");
    if (preset == Preset::section3 && variable != SweepVariable::eta_x)
      throw std::invalid_argument("SweepSpec: the section3 preset sweeps eta_x");
  }

  std::vector<double> grid() const {
    std::vector<double> g(steps);
    for (std::size_t i = 0; i < steps; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
      g[i] = variable == SweepVariable::sigma_x ? lo + (hi - lo) * t
                                                : std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * t);
    }
    g.front() = lo;
    g.back() = hi;
    return g;
  }

  QevParams params_at(unsigned m, double value) const {
    QevParams p = base;
    p.m = m;
    switch (preset) {
      case Preset::section2: return presets::section_two(m, value);
      case Preset::section3:
        p.eta_x = value;
        p.eta_y = 1.0 / (std::numbers::sqrt2 * value);
        return p;
      case Preset::custom:
        if (variable == SweepVariable::sigma_x)
          p.zeta_x = zeta_from_sigma(value);
        else
          p.eta_x = value;
        return p;
    }
    throw std::invalid_argument("SweepSpec: unknown preset");
  }
};

enum class RowError { none, invalid, non_convergence };

struct SweepRow {
  unsigned m = 0;
  double value = 0.0;
  std::vector<double> fields;  // NaN when error != none
  RowError error = RowError::none;
  std::string message;
};

struct SweepTable {
  SweepVariable variable = SweepVariable::sigma_x;
  std::vector<std::string> columns;
  std::vector<SweepRow> rows;

  std::size_t column(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw std::invalid_argument("SweepTable: no column " + name);
    return static_cast<std::size_t>(it - columns.begin());
  }

  bool has_error(RowError kind) const {
    return std::any_of(rows.begin(), rows.end(), [kind](const SweepRow& r) { return r.error == kind; });
  }

  std::vector<const SweepRow*> rows_for(unsigned m) const {
    std::vector<const SweepRow*> out;
    for (const auto& r : rows)
      if (r.m == m) out.push_back(&r);
    return out;
  }
};

namespace detail {

/// Evaluates fn(params) at every (m, value) pair, sorted by (m, value), in
/// parallel. Numerical failures and rejected parameters become error rows.
template <class Fn>
SweepTable run_sweep(const SweepSpec& spec, std::vector<std::string> columns, const Fn& fn) {
  spec.validate();
  std::vector<unsigned> ms = spec.m_list;
  std::stable_sort(ms.begin(), ms.end());
  const std::vector<double> grid = spec.grid();

  SweepTable table;
  table.variable = spec.variable;
  table.columns = std::move(columns);
  table.rows.resize(ms.size() * grid.size());
  const std::size_t ncol = table.columns.size();
  parallel_for(table.rows.size(), spec.workers, [&](std::size_t i) {
    SweepRow& row = table.rows[i];
    row.m = ms[i / grid.size()];
    row.value = grid[i % grid.size()];
    auto fail = [&](RowError kind, const char* what) {
      row.error = kind;
      row.message = what;
      row.fields.assign(ncol, std::numeric_limits<double>::quiet_NaN());
    };
    try {
      row.fields = fn(spec.params_at(row.m, row.value));
    } catch (const NonConvergence& e) {
      fail(RowError::non_convergence, e.what());
    } catch (const TruncationError& e) {
      fail(RowError::non_convergence, e.what());
    } catch (const std::domain_error& e) {
      fail(RowError::invalid, e.what());
    } catch (const std::invalid_argument& e) {
      fail(RowError::invalid, e.what());
    }
  });
  return table;
}

}  // namespace detail

enum class UncertaintyRoute { wavefunction, closed_form_wigner };

inline SweepTable sweep_uncertainty(const SweepSpec& spec, UncertaintyRoute route = UncertaintyRoute::wavefunction) {
  if (spec.variable != SweepVariable::sigma_x) throw std::invalid_argument("sweep_uncertainty: sweep sigma_x");
  return detail::run_sweep(spec, {"dx", "dy", "dpx", "dpy", "prod_x", "prod_y", "sum"}, [route](const QevParams& p) {
    const UncertaintyReport r =
        route == UncertaintyRoute::wavefunction ? uncertainty_report(p) : closed_form_uncertainty_report(p);
    return std::vector<double>{r.dx, r.dy, r.dpx, r.dpy, r.prod_x, r.prod_y, r.sum};
  });
}

inline SweepTable sweep_entropy(const SweepSpec& spec) {
  if (spec.variable != SweepVariable::eta_x) throw std::invalid_argument("sweep_entropy: sweep eta_x");
  return detail::run_sweep(spec,
                           {"s_a", "s_b", "s_ab", "s_a_plus_s_b", "abs_s_a_minus_s_b", "i_c", "subadditivity_ok",
                            "araki_lieb_ok"},
                           [](const QevParams& p) {
                             const EntropyReport r = entropy_report(p);
                             return std::vector<double>{r.s_a, r.s_b, r.s_ab, r.s_a + r.s_b, std::abs(r.s_a - r.s_b),
                                                        r.i_c, r.subadditivity_ok ? 1.0 : 0.0,
                                                        r.araki_lieb_ok ? 1.0 : 0.0};
                           });
}

// ---------------------------------------------------------------------------
// Optimization

/// Golden-section search for a maximum of f on [a, b], stopping once the
/// bracket is narrower than `width`. Ties keep the left part of the bracket.
template <class F>
std::pair<double, double> golden_section_maximize(const F& f, double a, double b, double width) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > width) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

enum class EntropyTarget { s_a, s_b, s_ab };

inline const char* to_string(EntropyTarget t) {
  switch (t) {
    case EntropyTarget::s_a: return "s_a";
    case EntropyTarget::s_b: return "s_b";
    case EntropyTarget::s_ab: return "s_ab";
  }
  return "?";
}

inline double target_entropy(const QevParams& p, EntropyTarget t) {
  switch (t) {
    case EntropyTarget::s_a: return shannon_entropy(modal_distribution(p, Mode::a));
    case EntropyTarget::s_b: return shannon_entropy(modal_distribution(p, Mode::b));
    case EntropyTarget::s_ab: return shannon_entropy(modal_distribution(p, Mode::joint));
  }
  throw std::invalid_argument("unknown entropy target");
}

struct OptimumResult {
  double eta_x_star = 0.0;
  double s_star = 0.0;
  bool unimodal = true;
  std::string warning;
};

inline constexpr std::size_t kCoarseScanPoints = 64;
inline constexpr double kOptimizerWidth = 1e-5;

/// Maximizes f(eta) over log(eta) in [lo, hi]: a coarse scan checks
/// unimodality, then golden-section search refines around the best coarse
/// point. Without unimodality the best coarse point is returned with a warning.
template <class F>
OptimumResult maximize_log_interval(const F& f, double lo, double hi) {
  if (!(lo > 0.0) || !(lo < hi)) throw std::invalid_argument("optimizer: need 0 < lo < hi");
  auto g = [&](double t) { return f(std::exp(t)); };
  const double ta = std::log(lo), tb = std::log(hi);
  std::vector<double> t(kCoarseScanPoints), v(kCoarseScanPoints);
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = ta + (tb - ta) * static_cast<double>(i) / static_cast<double>(t.size() - 1);
    v[i] = g(t[i]);
  }
  const std::size_t best = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
  const double tol = 1e-12 * std::max(1.0, std::abs(v[best]));
  bool unimodal = true;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (i < best && v[i + 1] < v[i] - tol) unimodal = false;
    if (i >= best && v[i + 1] > v[i] + tol) unimodal = false;
  }

  OptimumResult out;
  if (!unimodal) {
    out.eta_x_star = std::exp(t[best]);
    out.s_star = v[best];
    out.unimodal = false;
    out.warning = "target is not unimodal on the coarse scan; returning the best coarse point";
    return out;
  }
  const double a = t[best == 0 ? 0 : best - 1];
  const double b = t[std::min(best + 1, t.size() - 1)];
  // final bracket no wider than kOptimizerWidth in eta itself
  const auto [ts, fs] = golden_section_maximize(g, a, b, kOptimizerWidth / std::exp(b));
  out.eta_x_star = std::exp(ts);
  out.s_star = fs;
  return out;
}

/// Maximizes the target entropy over eta_x with eta_y = 1/(sqrt2 eta_x) and
/// the widths of `base`.
inline OptimumResult optimal_ellipticity(const QevParams& base, unsigned m, EntropyTarget target, double lo = 1e-2,
                                         double hi = 1e2) {
  SweepSpec spec;
  spec.variable = SweepVariable::eta_x;
  spec.preset = Preset::section3;
  spec.base = base;
  return maximize_log_interval([&](double eta) { return target_entropy(spec.params_at(m, eta), target); }, lo, hi);
}

// ---------------------------------------------------------------------------
// Entropy sweep structure

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct ArakiLiebRegion {
  unsigned m = 0;
  std::vector<Interval> intervals;
  std::size_t satisfied_points = 0;
  std::size_t total_points = 0;
};

/// Maximal runs of grid points with the Araki-Lieb flag set, per m.
inline std::vector<ArakiLiebRegion> araki_lieb_region(const SweepTable& table) {
  const std::size_t col = table.column("araki_lieb_ok");
  std::vector<ArakiLiebRegion> out;
  bool previous_ok = false;
  for (const auto& row : table.rows) {
    if (out.empty() || out.back().m != row.m) {
      out.push_back({row.m, {}, 0, 0});
      previous_ok = false;
    }
    ArakiLiebRegion& region = out.back();
    ++region.total_points;
    const bool ok = row.error == RowError::none && row.fields[col] == 1.0;
    if (ok) {
      ++region.satisfied_points;
      if (previous_ok)
        region.intervals.back().hi = row.value;
      else
        region.intervals.push_back({row.value, row.value});
    }
    previous_ok = ok;
  }
  return out;
}

inline std::vector<ArakiLiebRegion> araki_lieb_region(const SweepSpec& spec) {
  return araki_lieb_region(sweep_entropy(spec));
}

struct DifferencePeak {
  double eta_x = 0.0;
  double height = 0.0;
};

struct DifferenceProfile {
  unsigned m = 0;
  std::vector<double> crossings;     // interior eta_x where s_a - s_b changes sign
  std::vector<DifferencePeak> peaks;  // the two highest interior maxima of |s_a - s_b|, refined
  double peak_gap = std::numeric_limits<double>::quiet_NaN();
};

/// Crossings and the two highest peaks of |s_a - s_b| along an eta_x sweep for
/// one vorticity. Peaks are refined by golden-section search on log(eta_x).
inline DifferenceProfile difference_profile(const SweepSpec& spec, const SweepTable& table, unsigned m) {
  const auto rows = table.rows_for(m);
  const std::size_t ca = table.column("s_a"), cb = table.column("s_b");
  DifferenceProfile out;
  out.m = m;
  std::vector<double> diff(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i]->error != RowError::none) throw NonConvergence("difference_profile: sweep has failed rows");
    diff[i] = rows[i]->fields[ca] - rows[i]->fields[cb];
  }
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (diff[i] == 0.0 && i > 0 && diff[i - 1] * diff[i + 1] < 0.0) {
      out.crossings.push_back(rows[i]->value);
    } else if (diff[i] * diff[i + 1] < 0.0) {
      const double ta = std::log(rows[i]->value), tb = std::log(rows[i + 1]->value);
      out.crossings.push_back(std::exp(ta + (tb - ta) * diff[i] / (diff[i] - diff[i + 1])));
    }
  }

  std::vector<std::size_t> maxima;
  for (std::size_t i = 1; i + 1 < rows.size(); ++i)
    if (std::abs(diff[i]) > std::abs(diff[i - 1]) && std::abs(diff[i]) >= std::abs(diff[i + 1])) maxima.push_back(i);
  std::sort(maxima.begin(), maxima.end(),
            [&](std::size_t a, std::size_t b) { return std::abs(diff[a]) > std::abs(diff[b]); });
  if (maxima.size() > 2) maxima.resize(2);
  for (std::size_t i : maxima) {
    auto f = [&](double t) {
      const EntropyReport r = entropy_report(spec.params_at(m, std::exp(t)));
      return std::abs(r.s_a - r.s_b);
    };
    const auto [t, h] =
        golden_section_maximize(f, std::log(rows[i - 1]->value), std::log(rows[i + 1]->value), 1e-9);
    out.peaks.push_back({std::exp(t), h});
  }
  std::sort(out.peaks.begin(), out.peaks.end(),
            [](const DifferencePeak& a, const DifferencePeak& b) { return a.eta_x < b.eta_x; });
  if (out.peaks.size() == 2) out.peak_gap = std::abs(out.peaks[0].height - out.peaks[1].height);
  return out;
}

/// Fraction of consecutive grid intervals on which prod_x and prod_y move in
/// opposite directions; slopes below `flat` count as neither.
inline double complementarity_fraction(const SweepTable& table, unsigned m, double flat = 1e-9) {
  const auto rows = table.rows_for(m);
  if (rows.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const std::size_t cx = table.column("prod_x"), cy = table.column("prod_y");
  std::size_t opposite = 0;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const double sx = rows[i + 1]->fields[cx] - rows[i]->fields[cx];
    const double sy = rows[i + 1]->fields[cy] - rows[i]->fields[cy];
    if (std::abs(sx) > flat && std::abs(sy) > flat && (sx > 0.0) != (sy > 0.0)) ++opposite;
  }
  return static_cast<double>(opposite) / static_cast<double>(rows.size() - 1);
}

// ---------------------------------------------------------------------------
// Validation

struct ValidationCheck {
  std::string name;
  double deviation = 0.0;  // measured value; for informational entries the finding itself
  double tolerance = 0.0;  // 0 for informational entries
  bool passed = true;
  bool informational = false;
  std::string note;
  RowError error = RowError::none;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool all_hard_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.informational || c.passed; });
  }

  const ValidationCheck& find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw std::invalid_argument("ValidationReport: no check " + name);
  }
};

namespace detail {

// sum_n z^n (k+2n)! / (4^n n!^2 k!)
inline double fock_series_sum(unsigned k, double z) {
  if (z == 0.0) return 1.0;
  double sum = 0.0, c = 0.0;
  for (unsigned n = 0; n < 100000; ++n) {
    const double t = std::exp(n * std::log(z) + log_factorial(k + 2 * n) - n * std::log(4.0) - 2.0 * log_factorial(n) -
                              log_factorial(k));
    const double y = t - c;
    const double s = sum + y;
    c = (s - sum) - y;
    sum = s;
    if (n > 10 && t < 1e-18 * sum) break;
  }
  return sum;
}

template <class Fn>
ValidationCheck run_check(std::string name, double tolerance, bool informational, const Fn& fn) {
  ValidationCheck c;
  c.name = std::move(name);
  c.tolerance = tolerance;
  c.informational = informational;
  try {
    auto [dev, note] = fn();
    c.deviation = dev;
    c.note = std::move(note);
    c.passed = informational || (std::isfinite(dev) && dev <= tolerance);
  } catch (const std::exception& e) {
    c.deviation = std::numeric_limits<double>::max();
    c.passed = informational;
    c.note = std::string("error: ") + e.what();
    const bool numerical = dynamic_cast<const NonConvergence*>(&e) || dynamic_cast<const TruncationError*>(&e);
    c.error = numerical ? RowError::non_convergence : RowError::invalid;
  }
  return c;
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace detail

/// Fixed list of cross-checks between independent computations. Hard checks
/// carry a tolerance; informational ones record a finding.
inline ValidationReport validate(const QevParams& p, std::size_t workers = default_workers()) {
  using Result = std::pair<double, std::string>;
  ValidationReport rep;

  rep.checks.push_back(detail::run_check("hypergeometric_vs_fock_series", 1e-10, false, []() -> Result {
    double worst = 0.0;
    for (unsigned k = 0; k <= 10; ++k)
      for (int i = 0; i <= 36; ++i) {
        const double z = 0.99 * i / 36.0;
        const double rel = std::abs(gauss_2f1((k + 1) / 2.0, (k + 2) / 2.0, 1.0, z) / detail::fock_series_sum(k, z) - 1.0);
        worst = std::max(worst, rel);
      }
    return {worst, "max relative deviation, k <= 10, xi^2 <= 0.99"};
  }));

  rep.checks.push_back(detail::run_check("coordinate_vs_fock_moments", 1e-6, false, [&]() -> Result {
    const FockMoments f = fock_moments_oracle(fock_amplitudes(p));
    const Wavefunction psi = wavefunction(p, SpatialForm::fock_state);
    const QuadratureMoments pos = position_moments(psi), mom = momentum_moments(psi);
    const double worst = std::max({std::abs(f.position.second_x / pos.second_x - 1.0),
                                   std::abs(f.position.second_y / pos.second_y - 1.0),
                                   std::abs(f.momentum.second_x / mom.second_x - 1.0),
                                   std::abs(f.momentum.second_y / mom.second_y - 1.0)});
    return {worst, "max relative deviation of second moments"};
  }));

  rep.checks.push_back(detail::run_check("wigner_marginal", 1e-6, false, [&]() -> Result {
    const Wavefunction psi = wavefunction(p);
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<std::pair<double, double>> pts(25);
    for (auto& [x, y] : pts) {
      x = u(rng) * psi.sigma_x();
      y = u(rng) * psi.sigma_y();
    }
    std::vector<double> dev(pts.size());
    parallel_for(pts.size(), workers, [&](std::size_t i) {
      dev[i] = std::abs(wigner_position_marginal(psi, pts[i].first, pts[i].second) -
                        psi.density(pts[i].first, pts[i].second));
    });
    return {*std::max_element(dev.begin(), dev.end()), "max |marginal - |psi|^2| at 25 points"};
  }));

  rep.checks.push_back(detail::run_check("wigner_parity", 1e-8, false, [&]() -> Result {
    const Wavefunction psi = wavefunction(p);
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) {
      const PhasePoint pt{u(rng) * psi.sigma_x(), u(rng) * psi.sigma_y(), u(rng) / psi.sigma_x(), u(rng) / psi.sigma_y()};
      worst = std::max(worst, std::abs(wigner_numeric(psi, pt) - wigner_numeric(psi, -pt)));
    }
    return {worst, "max |W(pt) - W(-pt)| at 8 points"};
  }));

  rep.checks.push_back(detail::run_check("heisenberg_floor", 1e-9, false, [&]() -> Result {
    const UncertaintyReport r = uncertainty_report(p);
    return {std::max(0.0, 0.5 - std::min(r.prod_x, r.prod_y)),
            "prod_x = " + detail::fmt(r.prod_x) + ", prod_y = " + detail::fmt(r.prod_y)};
  }));

  rep.checks.push_back(detail::run_check("joint_binomial", 1e-12, false, [&]() -> Result {
    const auto d = modal_distribution(p, Mode::joint);
    const double q = p.eta_y * p.eta_y / (p.eta_x * p.eta_x + p.eta_y * p.eta_y);
    double worst = 0.0;
    for (unsigned k = 0; k <= p.m; ++k) {
      const double b = std::exp(log_binomial(p.m, k) + k * std::log(q) + (p.m - k) * std::log1p(-q));
      worst = std::max(worst, std::abs(d.probs[k] - b));
    }
    return {worst, "max |p_k - Binomial(m, q)|"};
  }));

  rep.checks.push_back(detail::run_check("printed_norm_ratio", 0.0, true, [&]() -> Result {
    return {printed_norm_ratio(p), "numeric / printed squared normalization, coordinate-consistent form"};
  }));

  rep.checks.push_back(detail::run_check("closed_form_vs_numeric_wigner", 0.0, true, [&]() -> Result {
    const WignerDiscrepancy w = closed_form_discrepancy(p, workers);
    const bool same_sign = std::signbit(w.closed_at_origin) == std::signbit(w.numeric_at_origin);
    return {w.max_abs_diff, "max |closed - numeric| on the 5^4 lattice; origin closed = " +
                                detail::fmt(w.closed_at_origin) + ", numeric = " + detail::fmt(w.numeric_at_origin) +
                                (same_sign ? " (same sign)" : " (opposite sign)") +
                                "; normalized / printed prefactor = " + detail::fmt(w.prefactor_ratio)};
  }));

  rep.checks.push_back(detail::run_check("eigen_vs_diagonal_entropy", 0.0, true, [&]() -> Result {
    const double exact = eigen_entropy_oracle(p);
    const double diag = shannon_entropy(modal_distribution(p, Mode::a));
    return {std::abs(exact - diag), "von Neumann S_a = " + detail::fmt(exact) + ", diagonal S_a = " + detail::fmt(diag)};
  }));

  return rep;
}

}  // namespace qev
