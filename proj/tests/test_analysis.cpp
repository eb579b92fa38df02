#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qev/analysis.hpp"

TEST(SweepSpec, GridEndpointsAndSpacing) {
  auto s = qev::SweepSpec::section_two({1});
  s.steps = 10;
  const auto g = s.grid();
  ASSERT_EQ(g.size(), 10u);
  EXPECT_EQ(g.front(), 1.0);
  EXPECT_EQ(g.back(), 10.0);
  EXPECT_NEAR(g[1] - g[0], 1.0, 1e-14);

  auto e = qev::SweepSpec::section_three({1});
  const auto h = e.grid();
  ASSERT_EQ(h.size(), 256u);
  EXPECT_EQ(h.front(), 0.05);
  EXPECT_EQ(h.back(), 20.0);
  EXPECT_NEAR(h[2] / h[1], h[1] / h[0], 1e-12);
}

TEST(SweepSpec, Validation) {
  auto s = qev::SweepSpec::section_two({1});
  s.lo = 5.0;
  s.hi = 5.0;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s.hi = 6.0;
  s.steps = 1;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s.steps = 2;
  s.m_list.clear();
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s.m_list = {0};
  s.variable = qev::SweepVariable::eta_x;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  EXPECT_THROW(qev::sweep_uncertainty(qev::SweepSpec::section_three({1})), std::invalid_argument);
}

TEST(SweepSpec, PresetCouplings) {
  const auto s = qev::SweepSpec::section_three({1});
  const auto p = s.params_at(2, 0.8);
  EXPECT_EQ(p.m, 2u);
  EXPECT_DOUBLE_EQ(p.eta_y, 1.0 / (std::numbers::sqrt2 * 0.8));
  EXPECT_NEAR(qev::derive(p).sigma_x, 5.0, 1e-14);
  EXPECT_NEAR(qev::derive(p).sigma_y, 3.0, 1e-14);

  qev::SweepSpec c;
  c.preset = qev::Preset::custom;
  c.base = qev::QevParams{1, 0.3, 0.4, 0.1, 0.2};
  const auto q = c.params_at(3, 2.0);
  EXPECT_NEAR(qev::derive(q).sigma_x, 2.0, 1e-14);
  EXPECT_EQ(q.eta_x, 0.3);
  EXPECT_EQ(q.zeta_y, 0.2);
}

TEST(SweepUncertainty, RowCountOrderAndShape) {
  auto s = qev::SweepSpec::section_two({3, 1});
  s.steps = 5;
  const auto t = qev::sweep_uncertainty(s);
  ASSERT_EQ(t.rows.size(), 10u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(t.rows[i].m, 1u);
  for (std::size_t i = 5; i < 10; ++i) EXPECT_EQ(t.rows[i].m, 3u);
  const std::size_t dx = t.column("dx"), dpx = t.column("dpx");
  for (std::size_t i = 1; i < 5; ++i) {
    EXPECT_GT(t.rows[i].value, t.rows[i - 1].value);
    EXPECT_GT(t.rows[i].fields[dx], t.rows[i - 1].fields[dx]);
    EXPECT_LT(t.rows[i].fields[dpx], t.rows[i - 1].fields[dpx]);
  }
}

TEST(SweepUncertainty, DeterministicAcrossWorkerCounts) {
  auto s = qev::SweepSpec::section_two({0, 2, 5});
  s.steps = 9;
  s.workers = 1;
  const auto a = qev::sweep_uncertainty(s);
  s.workers = 7;
  const auto b = qev::sweep_uncertainty(s);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].value, b.rows[i].value);
    EXPECT_EQ(a.rows[i].fields, b.rows[i].fields);
  }
}

TEST(SweepUncertainty, ComplementarityIsAbsentUnderSectionTwoPreset) {
  // Both products are constant in sigma_x under this coupling, so no interval
  // shows opposite slopes.
  auto s = qev::SweepSpec::section_two({1, 2});
  s.steps = 16;
  const auto t = qev::sweep_uncertainty(s);
  EXPECT_EQ(qev::complementarity_fraction(t, 1), 0.0);
  EXPECT_EQ(qev::complementarity_fraction(t, 2), 0.0);
}

TEST(SweepUncertainty, ClosedFormRoute) {
  auto s = qev::SweepSpec::section_two({0, 1});
  s.steps = 4;
  const auto t = qev::sweep_uncertainty(s, qev::UncertaintyRoute::closed_form_wigner);
  const std::size_t px = t.column("prod_x");
  for (const auto* r : t.rows_for(0)) EXPECT_NEAR(r->fields[px], 1.0 / std::numbers::sqrt2, 1e-10);
  for (const auto* r : t.rows_for(1)) EXPECT_TRUE(std::isfinite(r->fields[px]));
}

TEST(SweepEntropy, FailedPointsStayInTable) {
  qev::SweepSpec s = qev::SweepSpec::section_three({1, 2});
  s.steps = 6;
  s.base.zeta_y = 3.6;  // xi_y^2 so close to one that the series exceeds its term budget
  const auto t = qev::sweep_entropy(s);
  ASSERT_EQ(t.rows.size(), 12u);
  EXPECT_TRUE(t.has_error(qev::RowError::non_convergence));
  for (const auto& r : t.rows) {
    EXPECT_EQ(r.error, qev::RowError::non_convergence);
    EXPECT_FALSE(r.message.empty());
    EXPECT_TRUE(std::isnan(r.fields[0]));
  }
}

TEST(SweepEntropy, GaussianColumnsAreZero) {
  auto s = qev::SweepSpec::section_three({0});
  s.steps = 8;
  const auto t = qev::sweep_entropy(s);
  for (const auto& r : t.rows) {
    for (std::size_t c = 0; c < 6; ++c) EXPECT_EQ(r.fields[c], 0.0);
    EXPECT_EQ(r.fields[t.column("araki_lieb_ok")], 1.0);
  }
}

TEST(SweepEntropy, SectionThreeStructureForSingleQuantum) {
  const auto s = qev::SweepSpec::section_three({1});
  const auto t = qev::sweep_entropy(s);
  const std::size_t sa = t.column("s_a");
  EXPECT_LT(t.rows.front().fields[sa], 0.05);
  EXPECT_LT(t.rows.back().fields[sa], 0.05);
  for (const auto& r : t.rows) EXPECT_EQ(r.fields[t.column("subadditivity_ok")], 1.0);

  const auto prof = qev::difference_profile(s, t, 1);
  ASSERT_FALSE(prof.crossings.empty());
  for (double c : prof.crossings) {
    EXPECT_GT(c, s.lo);
    EXPECT_LT(c, s.hi);
  }
  ASSERT_EQ(prof.peaks.size(), 2u);
  EXPECT_LT(prof.peaks[0].eta_x, prof.peaks[1].eta_x);
  EXPECT_LT(prof.peak_gap, 1e-3);
}

TEST(ArakiLieb, RegionsPerVorticity) {
  auto s = qev::SweepSpec::section_three({0, 1});
  const auto regions = qev::araki_lieb_region(s);
  ASSERT_EQ(regions.size(), 2u);
  EXPECT_EQ(regions[0].m, 0u);
  ASSERT_EQ(regions[0].intervals.size(), 1u);
  EXPECT_EQ(regions[0].intervals[0].lo, s.lo);
  EXPECT_EQ(regions[0].intervals[0].hi, s.hi);

  const auto& r1 = regions[1];
  EXPECT_GT(r1.satisfied_points, 0u);
  EXPECT_LT(r1.satisfied_points, r1.total_points);
  for (const auto& iv : r1.intervals) {
    EXPECT_GE(iv.lo, s.lo);
    EXPECT_LE(iv.hi, s.hi);
    EXPECT_LE(iv.lo, iv.hi);
  }
}

TEST(Optimizer, GoldenSectionOnParabola) {
  const auto [x, f] = qev::golden_section_maximize([](double t) { return -(t - 0.3) * (t - 0.3) + 2.0; }, -1.0, 2.0, 1e-8);
  EXPECT_NEAR(x, 0.3, 1e-7);
  EXPECT_NEAR(f, 2.0, 1e-12);
}

TEST(Optimizer, JointEntropyOptimum) {
  const auto base = qev::presets::section_three(1, 1.0);
  for (unsigned m : {1u, 2u, 5u}) {
    const auto r = qev::optimal_ellipticity(base, m, qev::EntropyTarget::s_ab);
    EXPECT_TRUE(r.unimodal);
    EXPECT_NEAR(r.eta_x_star, std::pow(2.0, -0.25), 1e-5) << m;
  }
  EXPECT_NEAR(qev::optimal_ellipticity(base, 1, qev::EntropyTarget::s_ab).s_star, 1.0, 1e-9);
}

TEST(Optimizer, ModeAOptimumAwayFromUnitEllipticity) {
  const auto base = qev::presets::section_three(1, 1.0);
  const auto r = qev::optimal_ellipticity(base, 1, qev::EntropyTarget::s_a);
  EXPECT_TRUE(r.unimodal);
  EXPECT_GT(std::abs(r.eta_x_star - 1.0), 0.05);
  EXPECT_NEAR(r.eta_x_star, std::pow(1.0 / 0.72, 0.25), 1e-5);
  const auto again = qev::optimal_ellipticity(base, 1, qev::EntropyTarget::s_a, r.eta_x_star / 10.0, r.eta_x_star * 10.0);
  EXPECT_NEAR(again.eta_x_star, r.eta_x_star, 1e-5);
}

TEST(Optimizer, FlatTargetPrefersSmallerEta) {
  const auto r = qev::optimal_ellipticity(qev::presets::section_three(0, 1.0), 0, qev::EntropyTarget::s_a);
  EXPECT_TRUE(r.unimodal);
  EXPECT_NEAR(r.eta_x_star, 1e-2, 1e-5);
  EXPECT_EQ(r.s_star, 0.0);
}

TEST(Optimizer, WarnsOnMultimodalTarget) {
  auto bimodal = [](double eta) {
    const double t = std::log(eta);
    return std::exp(-(t - 2.0) * (t - 2.0)) + 0.9 * std::exp(-(t + 2.0) * (t + 2.0));
  };
  const auto r = qev::maximize_log_interval(bimodal, 1e-2, 1e2);
  EXPECT_FALSE(r.unimodal);
  EXPECT_FALSE(r.warning.empty());
  EXPECT_NEAR(std::log(r.eta_x_star), 2.0, 0.1);
}

TEST(Validate, SectionThreeSingleQuantumPassesHardChecks) {
  const auto rep = qev::validate(qev::presets::section_three(1, 1.0));
  EXPECT_GE(rep.checks.size(), 6u);
  for (const auto& c : rep.checks) {
    EXPECT_TRUE(std::isfinite(c.deviation)) << c.name;
    if (!c.informational) {
      EXPECT_TRUE(c.passed) << c.name << " " << c.deviation << " " << c.note;
    }
  }
  EXPECT_TRUE(rep.all_hard_passed());
  EXPECT_NO_THROW(rep.find("closed_form_vs_numeric_wigner"));
}

TEST(Validate, PrintedConstantRatio) {
  EXPECT_NEAR(qev::validate(qev::presets::circular(1, 1.0)).find("printed_norm_ratio").deviation, 2.0, 1e-10);
  EXPECT_NEAR(qev::validate(qev::QevParams{0, 1.0, 1.0, 0.0, 0.0}).find("printed_norm_ratio").deviation, 4.0, 1e-10);
}

TEST(Validate, RecordsFailuresInsteadOfThrowing) {
  // squeezing beyond what any Fock cutoff can hold
  const auto rep = qev::validate(qev::QevParams{1, 1.0, 1.0, 4.0, 0.0});
  EXPECT_FALSE(rep.all_hard_passed());
  const auto& c = rep.find("coordinate_vs_fock_moments");
  EXPECT_FALSE(c.passed);
  EXPECT_TRUE(std::isfinite(c.deviation));
  EXPECT_NE(c.note.find("error"), std::string::npos);
}
