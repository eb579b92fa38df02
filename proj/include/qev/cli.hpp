#pragma once

// Command-line front end: one subcommand per run, one output file, one summary
// line. Exit codes: 0 success, 1 invalid arguments, 2 numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <utility>
#include <vector>

#include "qev/analysis.hpp"

namespace qev::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class ExitCode : int { ok = 0, invalid = 1, numerical = 2 };

struct RunConfig {
  std::string subcommand;
  std::vector<unsigned> m_list{1};
  std::optional<double> eta_x, eta_y, zeta_x, zeta_y, sigma_x, sigma_y;
  std::string preset;  // empty: subcommand default
  std::optional<double> lo, hi, lo2, hi2;
  std::optional<std::size_t> steps, steps2;
  std::string target = "s_ab";
  std::string method = "numeric";
  std::string plane = "x,px";
  double fixed_x = 0.0, fixed_y = 0.0, fixed_px = 0.0, fixed_py = 0.0;
  std::string out;
  std::string format = "csv";
  std::size_t workers = 0;  // 0: hardware concurrency
};

// ---------------------------------------------------------------------------
// Output

using Cell = std::variant<double, long long, std::string>;

struct Output {
  std::vector<std::pair<std::string, std::string>> config;  // resolved parameters, in print order
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json findings = nlohmann::ordered_json::object();
};

inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline std::string csv_field(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  const std::string& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

inline void write_csv(std::ostream& os, const Output& out) {
  os << "# qev " << kVersion << '\n';
  for (const auto& [k, v] : out.config) os << "# " << k << ": " << v << '\n';
  for (std::size_t i = 0; i < out.columns.size(); ++i) os << (i ? "," : "") << out.columns[i];
  os << '\n';
  for (const auto& row : out.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  }
}

inline nlohmann::ordered_json json_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return std::isfinite(*d) ? nlohmann::ordered_json(*d) : nullptr;
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

inline void write_json(std::ostream& os, const Output& out) {
  nlohmann::ordered_json doc;
  doc["config"]["version"] = kVersion;
  for (const auto& [k, v] : out.config) doc["config"][k] = v;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : out.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[out.columns[i]] = json_cell(row[i]);
    doc["rows"].push_back(std::move(r));
  }
  doc["findings"] = out.findings;
  os << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Resolution

inline std::string join_m(const std::vector<unsigned>& ms) {
  std::string s;
  for (std::size_t i = 0; i < ms.size(); ++i) s += (i ? "," : "") + std::to_string(ms[i]);
  return s;
}

inline Preset parse_preset(const std::string& s) {
  if (s == "section2") return Preset::section2;
  if (s == "section3") return Preset::section3;
  if (s == "custom") return Preset::custom;
  throw std::invalid_argument("unknown preset " + s);
}

inline std::optional<double> width_override(const std::optional<double>& sigma, const std::optional<double>& zeta,
                                            const char* axis) {
  if (sigma && zeta) throw std::invalid_argument(std::string("give only one of --sigma-") + axis + " and --zeta-" + axis);
  if (sigma) return zeta_from_sigma(*sigma);
  return zeta;
}

/// Preset values first, then explicit overrides. The section2 preset derives
/// everything from sigma_x; section3 couples eta_y = 1/(sqrt2 eta_x) unless
/// eta_y is given.
inline QevParams resolve_params(const RunConfig& cfg, Preset preset, unsigned m) {
  const auto zx = width_override(cfg.sigma_x, cfg.zeta_x, "x");
  const auto zy = width_override(cfg.sigma_y, cfg.zeta_y, "y");
  QevParams p;
  p.m = m;
  switch (preset) {
    case Preset::section2:
      p = presets::section_two(m, zx ? std::exp(2.0 * *zx) : 1.0);
      break;
    case Preset::section3:
      p = presets::section_three(m, cfg.eta_x.value_or(1.0), zx ? std::exp(2.0 * *zx) : 5.0,
                                 zy ? std::exp(2.0 * *zy) : 3.0);
      break;
    case Preset::custom:
      break;
  }
  if (cfg.eta_x) p.eta_x = *cfg.eta_x;
  if (cfg.eta_y) p.eta_y = *cfg.eta_y;
  if (zx) p.zeta_x = *zx;
  if (zy) p.zeta_y = *zy;
  p.validate();
  return p;
}

inline void add_params(Output& out, const QevParams& p) {
  out.config.emplace_back("eta_x", format_double(p.eta_x));
  out.config.emplace_back("eta_y", format_double(p.eta_y));
  out.config.emplace_back("zeta_x", format_double(p.zeta_x));
  out.config.emplace_back("zeta_y", format_double(p.zeta_y));
}

inline std::size_t worker_count(const RunConfig& cfg) { return cfg.workers == 0 ? default_workers() : cfg.workers; }

inline SweepSpec resolve_sweep(const RunConfig& cfg, Preset default_preset, Output& out) {
  const Preset preset = cfg.preset.empty() ? default_preset : parse_preset(cfg.preset);
  SweepSpec s = default_preset == Preset::section2 ? SweepSpec::section_two(cfg.m_list) : SweepSpec::section_three(cfg.m_list);
  s.preset = preset;
  s.base = resolve_params(cfg, preset, cfg.m_list.front());
  if (cfg.lo) s.lo = *cfg.lo;
  if (cfg.hi) s.hi = *cfg.hi;
  if (cfg.steps) s.steps = *cfg.steps;
  s.workers = worker_count(cfg);
  s.validate();
  out.config.emplace_back("subcommand", cfg.subcommand);
  out.config.emplace_back("preset", to_string(preset));
  out.config.emplace_back("m", join_m(cfg.m_list));
  add_params(out, s.base);
  out.config.emplace_back("variable", to_string(s.variable));
  out.config.emplace_back("lo", format_double(s.lo));
  out.config.emplace_back("hi", format_double(s.hi));
  out.config.emplace_back("steps", std::to_string(s.steps));
  return s;
}

inline const char* error_name(RowError e) {
  switch (e) {
    case RowError::none: return "";
    case RowError::invalid: return "invalid";
    case RowError::non_convergence: return "non_convergence";
  }
  return "?";
}

inline ExitCode table_exit(const SweepTable& t) {
  if (t.has_error(RowError::non_convergence)) return ExitCode::numerical;
  if (t.has_error(RowError::invalid)) return ExitCode::invalid;
  return ExitCode::ok;
}

/// Rows of the table restricted to `columns`, with (variable, m) leading and an
/// error marker trailing.
inline void append_table(Output& out, const SweepTable& t, const std::vector<std::string>& columns) {
  out.columns = {to_string(t.variable), "m"};
  out.columns.insert(out.columns.end(), columns.begin(), columns.end());
  out.columns.push_back("error");
  std::vector<std::size_t> idx;
  for (const auto& c : columns) idx.push_back(t.column(c));
  for (const auto& r : t.rows) {
    std::vector<Cell> row{r.value, static_cast<long long>(r.m)};
    for (std::size_t i : idx) row.emplace_back(r.fields[i]);
    row.emplace_back(std::string(error_name(r.error)));
    out.rows.push_back(std::move(row));
  }
  for (const auto& r : t.rows)
    if (r.error != RowError::none) out.findings["row_errors"].push_back(r.message);
}

// ---------------------------------------------------------------------------
// Subcommands

struct Result {
  Output output;
  ExitCode code = ExitCode::ok;
  std::string summary;
};

inline const std::vector<std::string> kUncertaintyColumns = {"dx", "dy", "dpx", "dpy", "prod_x", "prod_y", "sum"};

inline Result run_uncertainty(const RunConfig& cfg) {
  Result res;
  const SweepSpec s = resolve_sweep(cfg, Preset::section2, res.output);
  res.output.config.emplace_back("method", cfg.method);
  if (cfg.method == "both") {
    const SweepTable wf = sweep_uncertainty(s, UncertaintyRoute::wavefunction);
    const SweepTable cf = sweep_uncertainty(s, UncertaintyRoute::closed_form_wigner);
    append_table(res.output, wf, kUncertaintyColumns);
    auto& cols = res.output.columns;
    cols.pop_back();
    for (const auto& c : kUncertaintyColumns) cols.push_back("closed_" + c);
    cols.push_back("error");
    for (std::size_t i = 0; i < res.output.rows.size(); ++i) {
      auto& row = res.output.rows[i];
      Cell err = row.back();
      row.pop_back();
      for (double v : cf.rows[i].fields) row.emplace_back(v);
      if (std::get<std::string>(err).empty()) err = std::string(error_name(cf.rows[i].error));
      row.push_back(err);
    }
    res.code = std::max(table_exit(wf), table_exit(cf));
  } else {
    const auto route = cfg.method == "closed" ? UncertaintyRoute::closed_form_wigner : UncertaintyRoute::wavefunction;
    const SweepTable t = sweep_uncertainty(s, route);
    append_table(res.output, t, kUncertaintyColumns);
    for (unsigned m : cfg.m_list)
      res.output.findings["complementarity_fraction"][std::to_string(m)] = complementarity_fraction(t, m);
    res.code = table_exit(t);
  }
  res.summary = cfg.subcommand + ": " + std::to_string(res.output.rows.size()) + " rows";
  return res;
}

inline Result run_entropy(const RunConfig& cfg, bool inequalities_only) {
  Result res;
  const SweepSpec s = resolve_sweep(cfg, Preset::section3, res.output);
  const SweepTable t = sweep_entropy(s);
  if (inequalities_only)
    append_table(res.output, t, {"s_a_plus_s_b", "s_ab", "abs_s_a_minus_s_b", "subadditivity_ok", "araki_lieb_ok"});
  else
    append_table(res.output, t, t.columns);
  res.code = table_exit(t);
  if (res.code == ExitCode::ok) {
    for (const auto& region : araki_lieb_region(t)) {
      auto& f = res.output.findings["araki_lieb"][std::to_string(region.m)];
      f["satisfied_points"] = region.satisfied_points;
      f["total_points"] = region.total_points;
      f["intervals"] = nlohmann::ordered_json::array();
      for (const auto& iv : region.intervals) f["intervals"].push_back({iv.lo, iv.hi});
    }
    if (inequalities_only) {
      for (unsigned m : cfg.m_list) {
        const DifferenceProfile prof = difference_profile(s, t, m);
        auto& f = res.output.findings["difference_profile"][std::to_string(m)];
        f["crossings"] = prof.crossings;
        f["peaks"] = nlohmann::ordered_json::array();
        for (const auto& pk : prof.peaks) f["peaks"].push_back({{"eta_x", pk.eta_x}, {"height", pk.height}});
        f["peak_gap"] = std::isfinite(prof.peak_gap) ? nlohmann::ordered_json(prof.peak_gap) : nullptr;
      }
    }
  }
  res.summary = cfg.subcommand + ": " + std::to_string(res.output.rows.size()) + " rows";
  return res;
}

inline EntropyTarget parse_target(const std::string& s) {
  if (s == "s_a") return EntropyTarget::s_a;
  if (s == "s_b") return EntropyTarget::s_b;
  if (s == "s_ab") return EntropyTarget::s_ab;
  throw std::invalid_argument("unknown target " + s);
}

inline Result run_optimize(const RunConfig& cfg) {
  Result res;
  const Preset preset = cfg.preset.empty() ? Preset::section3 : parse_preset(cfg.preset);
  const EntropyTarget target = parse_target(cfg.target);
  const double lo = cfg.lo.value_or(1e-2), hi = cfg.hi.value_or(1e2);
  auto& out = res.output;
  out.config.emplace_back("subcommand", cfg.subcommand);
  out.config.emplace_back("preset", to_string(preset));
  out.config.emplace_back("m", join_m(cfg.m_list));
  const QevParams base = resolve_params(cfg, preset, cfg.m_list.front());
  add_params(out, base);
  out.config.emplace_back("target", to_string(target));
  out.config.emplace_back("lo", format_double(lo));
  out.config.emplace_back("hi", format_double(hi));
  out.columns = {"m", "eta_x_star", "s_star", "unimodal", "warning"};
  std::string summary;
  for (unsigned m : cfg.m_list) {
    const OptimumResult r = optimal_ellipticity(base, m, target, lo, hi);
    out.rows.push_back({static_cast<long long>(m), r.eta_x_star, r.s_star, static_cast<long long>(r.unimodal), r.warning});
    summary += " m=" + std::to_string(m) + " eta_x_star=" + format_double(r.eta_x_star) +
               " s_star=" + format_double(r.s_star);
  }
  res.summary = cfg.subcommand + " " + to_string(target) + ":" + summary;
  return res;
}

inline PhaseAxis parse_axis(const std::string& s) {
  if (s == "x") return PhaseAxis::x;
  if (s == "y") return PhaseAxis::y;
  if (s == "px") return PhaseAxis::px;
  if (s == "py") return PhaseAxis::py;
  throw std::invalid_argument("unknown phase-space coordinate " + s);
}

inline Result run_wigner_grid(const RunConfig& cfg) {
  Result res;
  const Preset preset = cfg.preset.empty() ? Preset::section2 : parse_preset(cfg.preset);
  const QevParams p = resolve_params(cfg, preset, cfg.m_list.front());
  if (cfg.m_list.size() != 1) throw std::invalid_argument("wigner-grid takes a single --m");
  const auto comma = cfg.plane.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--plane expects two coordinates like x,px");

  PhaseGridRequest req;
  req.first = parse_axis(cfg.plane.substr(0, comma));
  req.second = parse_axis(cfg.plane.substr(comma + 1));
  req.fixed = {cfg.fixed_x, cfg.fixed_y, cfg.fixed_px, cfg.fixed_py};
  req.workers = worker_count(cfg);
  auto axis = [](double lo, double hi, std::size_t n) {
    if (n < 2) throw std::invalid_argument("wigner-grid axes need at least 2 samples");
    if (!(lo < hi)) throw std::invalid_argument("wigner-grid axes need lo < hi");
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return v;
  };
  const double lo = cfg.lo.value_or(-3.0), hi = cfg.hi.value_or(3.0);
  const std::size_t steps = cfg.steps.value_or(41);
  req.first_axis = axis(lo, hi, steps);
  req.second_axis = axis(cfg.lo2.value_or(lo), cfg.hi2.value_or(hi), cfg.steps2.value_or(steps));

  auto& out = res.output;
  out.config.emplace_back("subcommand", cfg.subcommand);
  out.config.emplace_back("preset", to_string(preset));
  out.config.emplace_back("m", std::to_string(p.m));
  add_params(out, p);
  out.config.emplace_back("plane", cfg.plane);
  out.config.emplace_back("fixed", "x=" + format_double(cfg.fixed_x) + " y=" + format_double(cfg.fixed_y) +
                                       " px=" + format_double(cfg.fixed_px) + " py=" + format_double(cfg.fixed_py));
  out.config.emplace_back("method", cfg.method);

  std::vector<Eigen::MatrixXd> grids;
  out.columns = {to_string(req.first), to_string(req.second)};
  if (cfg.method == "numeric" || cfg.method == "both") {
    req.method = WignerMethod::numeric;
    grids.push_back(wigner_grid(p, req).values);
    out.columns.push_back("w_numeric");
  }
  if (cfg.method == "closed" || cfg.method == "both") {
    req.method = WignerMethod::closed_form;
    grids.push_back(wigner_grid(p, req).values);
    out.columns.push_back("w_closed");
  }
  if (grids.empty()) throw std::invalid_argument("unknown method " + cfg.method);
  for (std::size_t i = 0; i < req.first_axis.size(); ++i)
    for (std::size_t j = 0; j < req.second_axis.size(); ++j) {
      std::vector<Cell> row{req.first_axis[i], req.second_axis[j]};
      for (const auto& g : grids) row.emplace_back(g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      out.rows.push_back(std::move(row));
    }
  if (grids.size() == 2) out.findings["max_abs_closed_minus_numeric"] = (grids[0] - grids[1]).cwiseAbs().maxCoeff();
  res.summary = cfg.subcommand + ": " + std::to_string(out.rows.size()) + " points";
  return res;
}

inline Result run_validate(const RunConfig& cfg) {
  Result res;
  const Preset preset = cfg.preset.empty() ? Preset::section3 : parse_preset(cfg.preset);
  if (cfg.m_list.size() != 1) throw std::invalid_argument("validate takes a single --m");
  const QevParams p = resolve_params(cfg, preset, cfg.m_list.front());
  auto& out = res.output;
  out.config.emplace_back("subcommand", cfg.subcommand);
  out.config.emplace_back("preset", to_string(preset));
  out.config.emplace_back("m", std::to_string(p.m));
  add_params(out, p);
  const ValidationReport rep = validate(p, worker_count(cfg));
  out.columns = {"check", "deviation", "tolerance", "passed", "informational", "note"};
  std::size_t hard = 0, passed = 0;
  for (const auto& c : rep.checks) {
    out.rows.push_back({c.name, c.deviation, c.tolerance, static_cast<long long>(c.passed),
                        static_cast<long long>(c.informational), c.note});
    if (c.informational) {
      out.findings[c.name] = {{"value", c.deviation}, {"note", c.note}};
    } else {
      ++hard;
      passed += c.passed;
    }
    if (c.error == RowError::non_convergence) res.code = ExitCode::numerical;
  }
  res.summary = cfg.subcommand + ": " + std::to_string(passed) + "/" + std::to_string(hard) + " hard checks passed, " +
                std::to_string(rep.checks.size() - hard) + " findings";
  return res;
}

// ---------------------------------------------------------------------------
// Entry

inline void add_options(CLI::App& app, RunConfig& cfg) {
  app.add_option("--m", cfg.m_list, "vorticity, or a comma-separated list for sweeps")->delimiter(',');
  app.add_option("--eta-x", cfg.eta_x, "ellipticity weight of mode a");
  app.add_option("--eta-y", cfg.eta_y, "ellipticity weight of mode b");
  app.add_option("--zeta-x", cfg.zeta_x, "squeezing parameter of mode a");
  app.add_option("--zeta-y", cfg.zeta_y, "squeezing parameter of mode b");
  app.add_option("--sigma-x", cfg.sigma_x, "Gaussian width of mode a (sets zeta_x = ln(sigma)/2)");
  app.add_option("--sigma-y", cfg.sigma_y, "Gaussian width of mode b (sets zeta_y = ln(sigma)/2)");
  app.add_option("--preset", cfg.preset, "parameter preset")->check(CLI::IsMember({"section2", "section3", "custom"}));
  app.add_option("--lo", cfg.lo, "lower end of the sweep, search or first grid axis");
  app.add_option("--hi", cfg.hi, "upper end of the sweep, search or first grid axis");
  app.add_option("--steps", cfg.steps, "number of sweep or first-axis samples");
  app.add_option("--lo2", cfg.lo2, "lower end of the second grid axis");
  app.add_option("--hi2", cfg.hi2, "upper end of the second grid axis");
  app.add_option("--steps2", cfg.steps2, "number of second-axis samples");
  app.add_option("--target", cfg.target, "entropy to maximize")->check(CLI::IsMember({"s_a", "s_b", "s_ab"}));
  app.add_option("--method", cfg.method, "Wigner function / uncertainty route")
      ->check(CLI::IsMember({"closed", "numeric", "both"}));
  app.add_option("--plane", cfg.plane, "two varied phase-space coordinates, e.g. x,px");
  app.add_option("--fixed-x", cfg.fixed_x, "held x value");
  app.add_option("--fixed-y", cfg.fixed_y, "held y value");
  app.add_option("--fixed-px", cfg.fixed_px, "held px value");
  app.add_option("--fixed-py", cfg.fixed_py, "held py value");
  app.add_option("--out", cfg.out, "output path (default <subcommand>.<format>)");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--workers", cfg.workers, "worker threads (0: all cores)");
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app("Quantum elliptical vortex: uncertainties, entropies and Wigner functions", "qev");
  RunConfig cfg;
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "flat key=value file; keys are flag names without dashes");
  app.allow_config_extras(false);
  add_options(app, cfg);
  app.require_subcommand(1, 1);
  const std::pair<const char*, const char*> commands[] = {
      {"uncertainty-sweep", "quadrature spreads and uncertainty products along a sigma_x sweep"},
      {"entropy-sweep", "modal entropies and inequality flags along an eta_x sweep"},
      {"inequalities", "entropy sweep restricted to the inequality columns, with region findings"},
      {"optimize", "eta_x maximizing the chosen entropy"},
      {"wigner-grid", "Wigner function on a two-dimensional phase-space slice"},
      {"validate", "cross-checks between independent computations"},
  };
  for (const auto& [name, description] : commands) app.add_subcommand(name, description)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "qev: " << e.what() << '\n';
    return static_cast<int>(ExitCode::invalid);
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (cfg.m_list.empty()) {
    err << "qev: --m needs at least one value\n";
    return static_cast<int>(ExitCode::invalid);
  }

  Result res;
  try {
    if (cfg.subcommand == "uncertainty-sweep")
      res = run_uncertainty(cfg);
    else if (cfg.subcommand == "entropy-sweep")
      res = run_entropy(cfg, false);
    else if (cfg.subcommand == "inequalities")
      res = run_entropy(cfg, true);
    else if (cfg.subcommand == "optimize")
      res = run_optimize(cfg);
    else if (cfg.subcommand == "wigner-grid")
      res = run_wigner_grid(cfg);
    else
      res = run_validate(cfg);
  } catch (const NonConvergence& e) {
    err << "qev: " << e.what() << '\n';
    return static_cast<int>(ExitCode::numerical);
  } catch (const TruncationError& e) {
    err << "qev: " << e.what() << '\n';
    return static_cast<int>(ExitCode::numerical);
  } catch (const std::invalid_argument& e) {
    err << "qev: " << e.what() << '\n';
    return static_cast<int>(ExitCode::invalid);
  } catch (const std::domain_error& e) {
    err << "qev: " << e.what() << '\n';
    return static_cast<int>(ExitCode::invalid);
  }

  res.output.config.emplace_back("format", cfg.format);
  const std::string path = cfg.out.empty() ? cfg.subcommand + "." + cfg.format : cfg.out;
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "qev: cannot open " << path << " for writing\n";
    return static_cast<int>(ExitCode::invalid);
  }
  if (cfg.format == "json")
    write_json(file, res.output);
  else
    write_csv(file, res.output);
  file.close();
  out << res.summary << " -> " << path << '\n';
  if (res.code != ExitCode::ok) err << "qev: some points failed; see the error column\n";
  return static_cast<int>(res.code);
}

}  // namespace qev::cli
