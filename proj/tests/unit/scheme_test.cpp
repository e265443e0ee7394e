#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "romdom/errors.hpp"
#include "romdom/graphing.hpp"
#include "romdom/scheme.hpp"
#include "support/oracle.hpp"

using namespace romdom;

namespace {

const AlphaSpec kAlpha = AlphaSpec::golden();

SchemeParams params(long eps_den, unsigned depth) {
  return SchemeParams{kAlpha, mpq_class(1, eps_den), depth};
}
CirclePoint pt(const mpq_class& p, long long q = 0) { return CirclePoint::make(p, q, kAlpha); }

}  // namespace

TEST(SchemeParams, Validation) {
  EXPECT_EQ(SchemeParams::default_depth(mpq_class(1, 100)), 3000u);
  EXPECT_EQ(SchemeParams::default_depth(mpq_class(1, 10)), 300u);
  EXPECT_EQ(SchemeParams::default_depth(mpq_class(3, 100)), 3u * 334u);
  EXPECT_THROW(params(10, 4).validate(), InvalidArgument);
  EXPECT_THROW(params(10, 0).validate(), InvalidArgument);
  EXPECT_THROW((SchemeParams{kAlpha, mpq_class(1), 3}).validate(), InvalidArgument);
  EXPECT_THROW((SchemeParams{kAlpha, mpq_class(0), 3}).validate(), InvalidArgument);
  EXPECT_THROW((SchemeParams{AlphaSpec::parse("cf:0,3"), mpq_class(1, 10), 3}).validate(),
               InvalidArgument);
  EXPECT_NO_THROW(params(10, 30).validate());
}

TEST(HitTime, Examples) {
  const SchemeParams p = params(10, 30);
  EXPECT_EQ(hit_time(pt(mpq_class(1, 20)), p), 0u);
  EXPECT_EQ(hit_time(pt(mpq_class(1, 20), 1), p), 1u);
  // Oracle: 1/2 - k alpha mod 1 for k = 0..4 is 0.5, 0.882, 0.264, 0.646, 0.028.
  EXPECT_EQ(hit_time(pt(mpq_class(1, 2)), p), 4u);
  EXPECT_EQ(oracle::hit_time(0.5, oracle::kGolden, 0.1, 30), 4);
  EXPECT_FALSE(hit_time(pt(mpq_class(1, 2)), params(10, 3)).has_value());
}

TEST(HitTime, AgreesWithFloatOracleAndLevelSets) {
  const SchemeParams p = params(100, 300);
  const LevelSets ls = build_level_sets(p);
  std::mt19937_64 rng(3);
  int compared = 0;
  for (int s = 0; s < 1000; ++s) {
    const long n = static_cast<long>(rng() % 1000003);
    const CirclePoint v = pt(mpq_class(n, 1000003));
    const double x = static_cast<double>(n) / 1000003.0;
    const auto k = hit_time(v, p);
    for (unsigned j = 0; j <= p.depth; ++j) {
      EXPECT_EQ(ls.levels[j].contains(v), k && *k == j);
    }
    EXPECT_EQ(ls.uncovered.contains(v), !k.has_value());
    if (oracle::hit_margin(x, oracle::kGolden, 0.01, 300) < 1e-9) continue;
    ++compared;
    EXPECT_EQ(k ? static_cast<long>(*k) : -1L, oracle::hit_time(x, oracle::kGolden, 0.01, 300));
  }
  EXPECT_GT(compared, 990);
}

TEST(HitTime, ChainRule) {
  const SchemeParams p = params(50, 150);
  std::mt19937_64 rng(4);
  const CirclePoint minus_alpha = pt(0, -1);
  for (int s = 0; s < 1000; ++s) {
    const CirclePoint v = pt(mpq_class(static_cast<long>(rng() % 65521), 65521));
    const auto k = hit_time(v, p);
    if (!k || *k == 0) continue;
    const auto k1 = hit_time(add(v, minus_alpha, kAlpha), p);
    ASSERT_TRUE(k1.has_value());
    EXPECT_EQ(*k1, *k - 1);
  }
}

TEST(LevelSets, Structure) {
  const LevelSets small = build_level_sets(params(10, 3));
  EXPECT_EQ(small.levels[0], CircleSet::arc(pt(0), pt(mpq_class(1, 10)), kAlpha));
  const LevelSets ls = build_level_sets(params(100, 60));
  CircleSet acc = CircleSet::empty(kAlpha);
  for (const CircleSet& d : ls.levels) {
    EXPECT_TRUE(intersect(acc, d).is_empty());
    acc = unite(acc, d);
  }
  EXPECT_EQ(acc, ls.covered);
  EXPECT_EQ(complement(ls.covered), ls.uncovered);
}

TEST(LevelSets, MonotoneCoverage) {
  const mpq_class eps(1, 100);
  QAlpha previous(0);
  for (unsigned k = 3; k <= 300; k += 3) {
    const LevelSets ls = build_level_sets(params(100, k));
    const QAlpha m = ls.covered.measure();
    EXPECT_TRUE(less_equal(previous, m, kAlpha));
    mpq_class cap = eps * (k + 1);
    if (cap > 1) cap = 1;
    EXPECT_TRUE(less_equal(m, QAlpha(cap), kAlpha));
    previous = m;
  }
  EXPECT_EQ(previous, QAlpha(1));
}

TEST(LevelSets, CoverageMatchesMonteCarlo) {
  for (auto [den, depth] : {std::pair{10L, 30u}, std::pair{100L, 30u}, std::pair{100L, 60u}}) {
    const LevelSets ls = build_level_sets(params(den, depth));
    const double exact = ls.covered.measure().approx(kAlpha);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int n = 100000;
    int hits = 0;
    for (int i = 0; i < n; ++i) {
      hits += oracle::hit_time(u(rng), oracle::kGolden, 1.0 / den, depth) >= 0 ? 1 : 0;
    }
    const double sigma = std::sqrt(std::max(exact * (1 - exact), 1e-9) / n);
    EXPECT_NEAR(static_cast<double>(hits) / n, exact, 3 * sigma + 1e-9)
        << "eps=1/" << den << " K=" << depth;
  }
}

TEST(Scheme, BoundsAndLabels) {
  for (auto [den, depth] : {std::pair{10L, 30u}, std::pair{10L, 3u}, std::pair{30L, 90u},
                            std::pair{100L, 300u}}) {
    const SchemeParams p = params(den, depth);
    const SchemeResult s = build_scheme(p);
    EXPECT_TRUE(s.labeling.ones().is_empty());
    EXPECT_TRUE(s.report.domination_valid);
    EXPECT_TRUE(s.report.x_bound_satisfied);
    EXPECT_TRUE(s.report.value_bound_satisfied);
    EXPECT_EQ(s.report.x_bound, mpq_class(1, 3) + mpq_class(4, 3) * p.epsilon);
    EXPECT_EQ(s.report.completed_value,
              mpq_class(2) * (s.x_set.measure() + s.levels.uncovered.measure()));
    EXPECT_EQ(s.labeling.twos(), unite(s.x_set, s.levels.uncovered));
    // 3 mu(X ∩ covered) <= 1 + 4 eps
    const QAlpha x_cov = intersect(s.x_set, s.levels.covered).measure();
    EXPECT_TRUE(less_equal(mpq_class(3) * x_cov, QAlpha(1 + 4 * p.epsilon), kAlpha));
    const RotationGraphing g = RotationGraphing::irrational_cycle(kAlpha);
    EXPECT_TRUE(is_rdf(g, s.labeling).violating_set.is_empty());
  }
}

TEST(Scheme, ShallowDepthLeavesLargeUncoveredRegion) {
  const SchemeResult s = build_scheme(params(10, 3));
  EXPECT_TRUE(s.report.domination_valid);
  EXPECT_TRUE(less(QAlpha(mpq_class(1, 2)), s.report.uncovered_measure, kAlpha));
  EXPECT_TRUE(difference(s.levels.uncovered, s.labeling.twos()).is_empty());
}

TEST(Scheme, DominationWitnessBySampling) {
  const SchemeResult s = build_scheme(params(100, 300));
  std::mt19937_64 rng(8);
  for (int i = 0; i < 2000; ++i) {
    const CirclePoint v = pt(mpq_class(static_cast<long>(rng() % 999983), 999983));
    if (!s.labeling.zeros().contains(v)) continue;
    const bool left = s.labeling.twos().contains(add(v, pt(0, -1), kAlpha));
    const bool right = s.labeling.twos().contains(add(v, pt(0, 1), kAlpha));
    EXPECT_TRUE(left || right);
  }
}

TEST(Scheme, AuditFlagshipSmall) {
  const SchemeParams p = params(10, 30);
  const SchemeAudit a = scheme_social_needy_audit(p);
  EXPECT_TRUE(a.within_bound);
  EXPECT_EQ(a.social_bound, QAlpha(mpq_class(1, 5)) + mpq_class(2) * a.uncovered_measure);
  EXPECT_TRUE(less_equal(a.social_measure, a.social_bound, kAlpha));
}

TEST(Scheme, NotInvariantUnderThreeAlpha) {
  for (long den : {10L, 100L}) {
    const SchemeResult s = build_scheme(SchemeParams::with_default_depth(kAlpha, mpq_class(1, den)));
    EXPECT_EQ(invariance_defect(s.labeling.twos(), pt(0, 3)).sign(kAlpha), 1);
  }
}
