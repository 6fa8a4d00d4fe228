#include <gtest/gtest.h>

#include <cmath>

#include "fusebench/error.hpp"
#include "fusebench/pca.hpp"
#include "fusebench/statistics.hpp"
#include "test_support.hpp"

namespace fusebench {
namespace {

using testing::Gen;
using testing::max_abs_diff;

TEST(GlobalStatsTest, Examples) {
  const BandStats c = global_stats(Band(4, 4, 7.0));
  EXPECT_EQ(c.mean, 7.0);
  EXPECT_EQ(c.std, 0.0);
  const BandStats two = global_stats(Band(2, 1, std::vector<double>{0, 2}));
  EXPECT_EQ(two.mean, 1.0);
  EXPECT_EQ(two.std, 1.0);
}

TEST(GlobalStatsTest, MatchesTwoPassOracle) {
  Gen gen(71);
  for (int t = 0; t < 10; ++t) {
    const Band b = gen.band(10, 10, -500.0, 500.0);
    const BandStats s = global_stats(b);
    EXPECT_NEAR(s.mean, testing::oracle_mean(b), 1e-10);
    EXPECT_NEAR(s.std, testing::oracle_std(b), 1e-10);
  }
}

TEST(GlobalStatsTest, ConstantBandsHaveExactlyZeroStd) {
  // Values whose naive sum-of-squares variance is not exactly zero.
  for (double v : {0.1, 1e8 + 0.3, -77.7}) {
    const Band b(13, 11, v);
    EXPECT_TRUE(is_constant(b));
    EXPECT_EQ(global_stats(b).std, 0.0);
  }
}

TEST(LocalStatsTest, Examples) {
  const LocalStats c = local_stats(Band(5, 4, 3.0));
  EXPECT_LE(max_abs_diff(c.means, Band(5, 4, 3.0)), 1e-12);
  EXPECT_EQ(c.stds, Band(5, 4));

  Gen gen(73);
  const Band b = gen.band(6, 5);
  const LocalStats one = local_stats(b, 1);
  EXPECT_EQ(one.means, b);
  EXPECT_EQ(one.stds, Band(6, 5));

  EXPECT_THROW(local_stats(b, 2), ParameterError);
  EXPECT_THROW(local_stats(b, 0), ParameterError);
}

TEST(LocalStatsTest, MatchesWindowOracle) {
  Gen gen(79);
  const Band b = gen.band(6, 6);
  const LocalStats ls = local_stats(b, 3);
  for (int y = 0; y < 6; ++y) {
    for (int x = 0; x < 6; ++x) {
      std::vector<double> win;
      for (int j = -1; j <= 1; ++j) {
        for (int i = -1; i <= 1; ++i) {
          win.push_back(b.at(std::clamp(x + i, 0, 5), std::clamp(y + j, 0, 5)));
        }
      }
      const Band w(9, 1, win);
      EXPECT_NEAR(ls.means.at(x, y), testing::oracle_mean(w), 1e-10);
      EXPECT_NEAR(ls.stds.at(x, y), testing::oracle_std(w), 1e-10);
    }
  }
}

TEST(LocalStatsTest, FullWindowAtCentreIsGlobal) {
  Gen gen(83);
  const Band b = gen.band(7, 7);
  const LocalStats ls = local_stats(b, 7);
  const BandStats g = global_stats(b);
  EXPECT_NEAR(ls.means.at(3, 3), g.mean, 1e-10);
  EXPECT_NEAR(ls.stds.at(3, 3), g.std, 1e-10);
}

TEST(MatchTest, Examples) {
  Gen gen(89);
  const Band b = gen.band(8, 8);
  EXPECT_LE(max_abs_diff(match_mean_std(b, global_stats(b)), b), 1e-12);

  const Band src(2, 1, std::vector<double>{8, 12});  // mean 10, std 2
  const Band out = match_mean_std(src, {0.0, 1.0});
  EXPECT_NEAR(out.at(0, 0), (8.0 - 10.0) / 2.0, 1e-12);
  EXPECT_NEAR(out.at(1, 0), (12.0 - 10.0) / 2.0, 1e-12);
}

TEST(MatchTest, HitsArbitraryTargets) {
  Gen gen(97);
  for (int t = 0; t < 20; ++t) {
    const Band b = gen.band(9, 6, -100.0, 400.0);
    const BandStats target{gen.uniform(-1000.0, 1000.0), gen.uniform(0.0, 300.0)};
    const BandStats got = global_stats(match_mean_std(b, target));
    EXPECT_NEAR(got.mean, target.mean, 1e-9);
    EXPECT_NEAR(got.std, target.std, 1e-9);
  }
}

TEST(MatchTest, InvertibleByMatchingBack) {
  Gen gen(101);
  const Band b = gen.band(8, 5);
  const Band there = match_mean_std(b, {3.0, 0.5});
  EXPECT_LE(max_abs_diff(match_mean_std(there, global_stats(b)), b), 1e-9);
}

TEST(MatchTest, ConstantSource) {
  EXPECT_THROW(match_mean_std(Band(3, 3, 4.0), {1.0, 2.0}), DegenerateError);
  EXPECT_EQ(match_mean_std(Band(3, 3, 4.0), {1.0, 0.0}), Band(3, 3, 1.0));
}

TEST(CovarianceTest, Examples) {
  Gen gen(103);
  const Band b = gen.band(6, 6);
  const Covariance3 same = covariance3(MultibandImage({b, b, b}));
  const double var = testing::oracle_std(b) * testing::oracle_std(b);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(same(r, c), var, 1e-9);
  }

  const Covariance3 zero = covariance3(MultibandImage({Band(3, 3, 1.0), Band(3, 3, 2.0), Band(3, 3, 3.0)}));
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) EXPECT_EQ(zero(r, c), 0.0);
  }
}

TEST(CovarianceTest, MatchesOuterProductOracle) {
  Gen gen(107);
  const MultibandImage img = gen.rgb(8, 8);
  const double n = 64.0;
  std::array<double, 3> mean{};
  for (int k = 0; k < 3; ++k) mean[k] = testing::oracle_mean(img.band(k));
  std::array<std::array<double, 3>, 3> scatter{};
  for (std::size_t i = 0; i < 64; ++i) {
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        scatter[r][c] += (img.band(r).samples()[i] - mean[r]) * (img.band(c).samples()[i] - mean[c]);
      }
    }
  }
  const Covariance3 norm = covariance3(img, true);
  const Covariance3 raw = covariance3(img, false);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      EXPECT_NEAR(raw(r, c), scatter[r][c], 1e-9 * n * 255.0 * 255.0);
      EXPECT_NEAR(norm(r, c), scatter[r][c] / n, 1e-9);
      EXPECT_EQ(norm(r, c), norm(c, r));
    }
  }
}

TEST(CovarianceTest, NormalizationKeepsEigenvectors) {
  Gen gen(109);
  for (int t = 0; t < 10; ++t) {
    const MultibandImage img = gen.correlated_rgb(10, 10);
    const PcaBasis a = eigen_sym3(covariance3(img, true));
    const PcaBasis b = eigen_sym3(covariance3(img, false));
    for (int row = 0; row < 3; ++row) {
      EXPECT_NEAR(a.component(row, 0), b.component(row, 0), 1e-9);
    }
    EXPECT_NEAR(b.eigenvalues[0], a.eigenvalues[0] * 100.0, 1e-9 * b.eigenvalues[0]);
  }
}

TEST(CorrelationTest, UnitDiagonalAndBounds) {
  Gen gen(113);
  const Covariance3 r = correlation_from(covariance3(gen.correlated_rgb(9, 9)));
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(r(i, i), 1.0, 1e-12);
    for (int j = 0; j < 3; ++j) EXPECT_LE(std::abs(r(i, j)), 1.0 + 1e-12);
  }
  const Covariance3 flat =
      correlation_from(covariance3(MultibandImage({gen.band(3, 3), Band(3, 3, 1.0), gen.band(3, 3)})));
  EXPECT_EQ(flat(1, 1), 1.0);
  EXPECT_EQ(flat(0, 1), 0.0);
  EXPECT_EQ(flat(1, 2), 0.0);
}

}  // namespace
}  // namespace fusebench
