#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "qev/entropy.hpp"

namespace {

double binomial_entropy(unsigned m, double q) {
  double s = 0.0;
  for (unsigned k = 0; k <= m; ++k) {
    const double lp = std::lgamma(m + 1.0) - std::lgamma(k + 1.0) - std::lgamma(m - k + 1.0) + k * std::log(q) +
                      (m - k) * std::log1p(-q);
    const double p = std::exp(lp);
    if (p > 0.0) s -= p * lp / std::log(2.0);
  }
  return s;
}

qev::QevParams with_xi(unsigned m, double eta_x, double eta_y, double xi_x, double xi_y) {
  return {m, eta_x, eta_y, std::atanh(xi_x) / 2.0, std::atanh(xi_y) / 2.0};
}

}  // namespace

TEST(ModalDistribution, SingleTermForGaussian) {
  for (auto mode : {qev::Mode::a, qev::Mode::b, qev::Mode::joint}) {
    const auto d = qev::modal_distribution(qev::QevParams{0, 0.7, 1.9, 0.3, -0.4}, mode);
    ASSERT_EQ(d.probs.size(), 1u);
    EXPECT_EQ(d.probs[0], 1.0);
    EXPECT_EQ(d.mode, mode);
  }
}

TEST(ModalDistribution, JointSymmetricIsHalfHalf) {
  const auto d = qev::modal_distribution(qev::QevParams{1, 0.6, 0.6, 0.2, 0.9}, qev::Mode::joint);
  EXPECT_NEAR(d.probs[0], 0.5, 1e-15);
  EXPECT_NEAR(d.probs[1], 0.5, 1e-15);
}

TEST(ModalDistribution, ModeAWorkedExample) {
  const auto d = qev::modal_distribution(with_xi(1, 1.0, 1.0, 0.3, 0.8), qev::Mode::a);
  EXPECT_NEAR(d.probs[1] / d.probs[0], (1.0 / 0.216) / (1.0 / 0.6), 1e-12);
  EXPECT_NEAR(d.probs[0], 0.2647059, 1e-7);
  EXPECT_NEAR(d.probs[1], 0.7352941, 1e-7);
}

TEST(ModalDistribution, NormalizedAndNonNegative) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> eta(0.01, 10.0), zeta(-1.2, 1.2);
  for (int i = 0; i < 200; ++i) {
    const qev::QevParams p{static_cast<unsigned>(i % 51), eta(rng), eta(rng), zeta(rng), zeta(rng)};
    for (auto mode : {qev::Mode::a, qev::Mode::b, qev::Mode::joint}) {
      const auto d = qev::modal_distribution(p, mode);
      ASSERT_EQ(d.probs.size(), p.m + 1);
      for (double q : d.probs) EXPECT_GE(q, 0.0);
      EXPECT_NEAR(std::accumulate(d.probs.begin(), d.probs.end(), 0.0), 1.0, 1e-12);
    }
  }
}

TEST(ModalDistribution, JointIsBinomial) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> eta(0.1, 4.0);
  for (unsigned m = 0; m <= 20; ++m) {
    const double ex = eta(rng), ey = eta(rng);
    const qev::QevParams p{m, ex, ey, 0.1, 0.2};
    const double q = ey * ey / (ex * ex + ey * ey);
    const auto d = qev::modal_distribution(p, qev::Mode::joint);
    for (unsigned k = 0; k <= m; ++k) {
      const double expected = std::exp(std::lgamma(m + 1.0) - std::lgamma(k + 1.0) - std::lgamma(m - k + 1.0) +
                                       k * std::log(q) + (m - k) * std::log1p(-q));
      EXPECT_NEAR(d.probs[k], expected, 1e-12);
    }
    EXPECT_NEAR(qev::shannon_entropy(d), binomial_entropy(m, q), 1e-12);
  }
}

TEST(ModalDistribution, ModeSwapSymmetry) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> eta(0.2, 3.0), zeta(-0.8, 0.8);
  for (int i = 0; i < 30; ++i) {
    const qev::QevParams p{static_cast<unsigned>(1 + i % 7), eta(rng), eta(rng), zeta(rng), zeta(rng)};
    const qev::QevParams swapped{p.m, p.eta_y, p.eta_x, p.zeta_y, p.zeta_x};
    const auto a = qev::modal_distribution(p, qev::Mode::a);
    const auto b = qev::modal_distribution(swapped, qev::Mode::b);
    for (unsigned k = 0; k <= p.m; ++k) EXPECT_NEAR(a.probs[k], b.probs[p.m - k], 1e-14);
  }
}

TEST(ModalDistribution, DomainErrorAtUnitXi) {
  // tanh(40) rounds to exactly 1
  EXPECT_THROW(qev::modal_distribution(qev::QevParams{1, 1.0, 1.0, 0.0, 20.0}, qev::Mode::a), std::domain_error);
  EXPECT_THROW(qev::modal_distribution(qev::QevParams{1, 1.0, 1.0, 20.0, 0.0}, qev::Mode::b), std::domain_error);
  EXPECT_NO_THROW(qev::modal_distribution(qev::QevParams{1, 1.0, 1.0, 20.0, 20.0}, qev::Mode::joint));
}

TEST(ShannonEntropy, KnownValues) {
  EXPECT_EQ(qev::shannon_entropy(std::vector<double>{1.0}), 0.0);
  EXPECT_NEAR(qev::shannon_entropy(std::vector<double>{0.25, 0.75}), 0.8112781, 1e-7);
  for (int n : {2, 3, 8, 17})
    EXPECT_NEAR(qev::shannon_entropy(std::vector<double>(n, 1.0 / n)), std::log2(n), 1e-14);
  EXPECT_NEAR(qev::shannon_entropy(std::vector<double>{0.0, 0.5, 0.5}), 1.0, 1e-15);
}

TEST(EntropyReport, GaussianAndSymmetricCases) {
  const auto zero = qev::entropy_report(qev::QevParams{0, 1.3, 0.4, 0.2, 0.5});
  EXPECT_EQ(zero.s_a, 0.0);
  EXPECT_EQ(zero.s_b, 0.0);
  EXPECT_EQ(zero.s_ab, 0.0);
  EXPECT_TRUE(zero.subadditivity_ok);
  EXPECT_TRUE(zero.araki_lieb_ok);

  const auto sym = qev::entropy_report(qev::QevParams{1, 0.9, 0.9, 0.35, 0.35});
  EXPECT_NEAR(sym.s_a, sym.s_b, 1e-14);
  EXPECT_NEAR(sym.s_ab, 1.0, 1e-14);
  EXPECT_DOUBLE_EQ(sym.i_c, sym.s_a + sym.s_b - sym.s_ab);
}

TEST(EntropyReport, FlagsFollowDefinitions) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> eta(0.05, 5.0), zeta(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const auto r = qev::entropy_report(qev::QevParams{static_cast<unsigned>(i % 9), eta(rng), eta(rng), zeta(rng), zeta(rng)});
    EXPECT_EQ(r.subadditivity_ok, r.s_ab <= r.s_a + r.s_b + 1e-9);
    EXPECT_EQ(r.araki_lieb_ok, r.s_ab >= std::abs(r.s_a - r.s_b) - 1e-9);
    EXPECT_GE(r.s_a, 0.0);
  }
}

TEST(EntropyReport, SectionThreeGrowsWithVorticity) {
  double prev = -1.0;
  for (unsigned m = 1; m <= 5; ++m) {
    const double s = qev::entropy_report(qev::presets::section_three(m, 0.8)).s_a;
    EXPECT_GT(s, prev) << m;
    prev = s;
  }
}

TEST(EigenEntropy, ProductStatesHaveNone) {
  EXPECT_NEAR(qev::eigen_entropy_oracle(qev::QevParams{0, 1.0, 1.0, 0.0, 0.0}, 4), 0.0, 1e-12);
  for (double z : {-0.4, 0.2, 0.5})
    EXPECT_NEAR(qev::eigen_entropy_oracle(qev::QevParams{0, 1.0, 1.0, z, -z}), 0.0, 1e-9);
}

TEST(EigenEntropy, SymmetricSingleQuantumIsOneBit) {
  EXPECT_NEAR(qev::eigen_entropy_oracle(qev::QevParams{1, 1.0, 1.0, 0.0, 0.0}, 4), 1.0, 1e-12);
  EXPECT_NEAR(qev::eigen_entropy_oracle(qev::QevParams{1, 0.3, 0.3, 0.0, 0.0}), 1.0, 1e-12);
}

TEST(EigenEntropy, PureStateHasEqualReducedEntropies) {
  const auto vec = qev::fock_amplitudes(qev::QevParams{3, 0.7, 1.4, 0.3, -0.2});
  auto other = vec;
  other.amplitudes = vec.amplitudes.transpose();
  const double s = qev::eigen_entropy_oracle(vec);
  EXPECT_GT(s, 0.1);
  EXPECT_NEAR(s, qev::eigen_entropy_oracle(other), 1e-9);
}

TEST(EigenEntropy, PropagatesTruncation) {
  EXPECT_THROW(qev::eigen_entropy_oracle(qev::QevParams{1, 1.0, 1.0, 0.8, 0.0}, 8), qev::TruncationError);
}
