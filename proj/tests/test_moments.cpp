#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "qev/moments.hpp"

namespace {

qev::TwoModeFockVector basis_vector(std::size_t na, std::size_t nb, std::size_t cutoff) {
  qev::TwoModeFockVector v;
  v.cutoff = cutoff;
  v.amplitudes = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(cutoff), static_cast<Eigen::Index>(cutoff));
  v.amplitudes(static_cast<Eigen::Index>(na), static_cast<Eigen::Index>(nb)) = 1.0;
  v.tail_mass = 0.0;
  return v;
}

}  // namespace

TEST(PositionMoments, GaussianState) {
  for (double sigma : {0.5, 1.0, 3.0}) {
    const qev::QevParams p{0, 1.0, 1.0, qev::zeta_from_sigma(sigma), qev::zeta_from_sigma(2.0 * sigma)};
    const auto m = qev::position_moments(p);
    EXPECT_NEAR(m.second_x, sigma * sigma / 2.0, 1e-12 * sigma * sigma);
    EXPECT_NEAR(m.second_y, 2.0 * sigma * sigma, 1e-12 * sigma * sigma);
    EXPECT_NEAR(m.mean_x, 0.0, 1e-14);
    const auto k = qev::momentum_moments(p);
    EXPECT_NEAR(k.second_x, 1.0 / (2.0 * sigma * sigma), 1e-12 / (sigma * sigma));
  }
}

TEST(PositionMoments, CircularVortex) {
  for (double sigma : {0.7, 1.0, 2.5}) {
    const auto p = qev::presets::circular(1, sigma);
    const auto pos = qev::position_moments(p);
    const auto mom = qev::momentum_moments(p);
    EXPECT_NEAR(pos.second_x / (sigma * sigma), 1.0, 1e-12);
    EXPECT_NEAR(pos.second_y / (sigma * sigma), 1.0, 1e-12);
    EXPECT_NEAR(mom.second_x * sigma * sigma, 1.0, 1e-12);
    const auto r = qev::uncertainty_report(p);
    EXPECT_NEAR(r.prod_x, 1.0, 1e-10);
    EXPECT_NEAR(r.prod_y, r.prod_x, 1e-12);
    EXPECT_NEAR(r.sum, 2.0, 1e-10);
  }
}

TEST(PositionMoments, MeansVanishByParity) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> eta(0.2, 2.0), zeta(-0.5, 0.5);
  for (int i = 0; i < 20; ++i) {
    const qev::QevParams p{static_cast<unsigned>(i % 6), eta(rng), eta(rng), zeta(rng), zeta(rng)};
    const auto pos = qev::position_moments(p);
    const auto mom = qev::momentum_moments(p);
    EXPECT_NEAR(pos.mean_x, 0.0, 1e-12 * std::sqrt(pos.second_x));
    EXPECT_NEAR(pos.mean_y, 0.0, 1e-12 * std::sqrt(pos.second_y));
    EXPECT_NEAR(mom.mean_x, 0.0, 1e-12 * std::sqrt(mom.second_x));
    EXPECT_NEAR(mom.mean_y, 0.0, 1e-12 * std::sqrt(mom.second_y));
  }
}

TEST(Uncertainty, HeisenbergAtRandomParameters) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> eta(0.05, 5.0), zeta(-1.0, 1.0);
  for (int i = 0; i < 60; ++i) {
    const qev::QevParams p{static_cast<unsigned>(i % 7), eta(rng), eta(rng), zeta(rng), zeta(rng)};
    for (auto form : {qev::SpatialForm::given_eta, qev::SpatialForm::fock_state}) {
      const auto r = qev::uncertainty_report(p, form);
      EXPECT_GE(r.prod_x, 0.5 - 1e-9);
      EXPECT_GE(r.prod_y, 0.5 - 1e-9);
    }
  }
}

TEST(Uncertainty, SectionTwoPresetIsScaleInvariant) {
  // The preset makes the vortex circular in the scaled coordinates x/sigma_x, y/sigma_y,
  // so both products sit at (m+1)/2 while the widths follow sigma_x.
  for (unsigned m = 0; m <= 3; ++m) {
    double prev_dx = 0.0;
    for (double s : {1.0, 2.0, 4.5, 10.0}) {
      const auto r = qev::uncertainty_report(qev::presets::section_two(m, s));
      EXPECT_NEAR(r.prod_x, (m + 1) / 2.0, 1e-10);
      EXPECT_NEAR(r.prod_y, (m + 1) / 2.0, 1e-10);
      EXPECT_GT(r.dx, prev_dx);
      prev_dx = r.dx;
    }
  }
}

TEST(FockOracle, BasisStates) {
  const auto vac = qev::fock_moments_oracle(basis_vector(0, 0, 4));
  EXPECT_DOUBLE_EQ(vac.position.second_x, 0.5);
  EXPECT_DOUBLE_EQ(vac.momentum.second_y, 0.5);
  const auto one = qev::fock_moments_oracle(basis_vector(1, 0, 4));
  EXPECT_NEAR(one.position.second_x, 1.5, 1e-15);
  EXPECT_NEAR(one.momentum.second_x, 1.5, 1e-15);
  EXPECT_NEAR(one.position.second_y, 0.5, 1e-15);
  // the top level still sees its raised neighbour
  const auto top = qev::fock_moments_oracle(basis_vector(3, 3, 4));
  EXPECT_NEAR(top.position.second_x, 3.5, 1e-15);
}

TEST(FockOracle, CoherentSuperpositionMean) {
  // (|0> + |1>)/sqrt2 in mode a: <x> = 1/sqrt2, <p> = 0
  auto v = basis_vector(0, 0, 3);
  v.amplitudes(0, 0) = v.amplitudes(1, 0) = 1.0 / std::numbers::sqrt2;
  const auto m = qev::fock_moments_oracle(v);
  EXPECT_NEAR(m.position.mean_x, 1.0 / std::numbers::sqrt2, 1e-15);
  EXPECT_NEAR(m.momentum.mean_x, 0.0, 1e-15);
}

TEST(FockOracle, RejectsHeavyTail) {
  auto v = basis_vector(0, 0, 2);
  v.tail_mass = 1e-6;
  EXPECT_THROW(qev::fock_moments_oracle(v), qev::TruncationError);
}

TEST(FockOracle, AgreesWithCoordinateMoments) {
  for (unsigned m = 0; m <= 5; ++m)
    for (double zx : {-0.5, 0.0, 0.3, 0.5})
      for (double zy : {-0.2, 0.5}) {
        const qev::QevParams p{m, 0.8, 1.2, zx, zy};
        const auto f = qev::fock_moments_oracle(qev::fock_amplitudes(p));
        const auto pos = qev::position_moments(p, qev::SpatialForm::fock_state);
        const auto mom = qev::momentum_moments(p, qev::SpatialForm::fock_state);
        EXPECT_NEAR(f.position.second_x / pos.second_x, 1.0, 1e-6) << m << " " << zx << " " << zy;
        EXPECT_NEAR(f.position.second_y / pos.second_y, 1.0, 1e-6);
        EXPECT_NEAR(f.momentum.second_x / mom.second_x, 1.0, 1e-6);
        EXPECT_NEAR(f.momentum.second_y / mom.second_y, 1.0, 1e-6);
      }
}

TEST(FockOracle, MatchesCircularCaseAtUnitWidth) {
  const qev::QevParams p{1, 1.0, 1.0, 0.0, 0.0};
  const auto f = qev::fock_moments_oracle(qev::fock_amplitudes(p));
  const auto pos = qev::position_moments(qev::presets::circular(1, 1.0));
  EXPECT_NEAR(f.position.second_x, pos.second_x, 1e-6);
  EXPECT_NEAR(f.position.second_x, 1.0, 1e-12);
}

TEST(ClosedFormRoute, GaussianProductIsOneOverRootTwo) {
  for (double s : {1.0, 3.0}) {
    const auto r = qev::closed_form_uncertainty_report(qev::presets::section_two(0, s));
    EXPECT_NEAR(r.prod_x, 1.0 / std::numbers::sqrt2, 1e-10);
    EXPECT_NEAR(r.prod_y, 1.0 / std::numbers::sqrt2, 1e-10);
  }
}

TEST(Moments, NonConvergenceOnRoughIntegrand) {
  auto rough = [](double x, double) { return std::array<double, 4>{0.0, 0.0, std::sqrt(std::abs(x)), 1.0}; };
  EXPECT_THROW(qev::detail::certified_moments(rough, 1.0, 1.0, "test"), qev::NonConvergence);
}
