#include <gtest/gtest.h>

#include <random>

#include "romdom/errors.hpp"
#include "romdom/experiments.hpp"
#include "romdom/graphing.hpp"
#include "support/oracle.hpp"

using namespace romdom;

namespace {

const AlphaSpec kAlpha = AlphaSpec::golden();

CirclePoint pt(const mpq_class& p, long long q = 0) { return CirclePoint::make(p, q, kAlpha); }
CircleSet arc(const mpq_class& s, const mpq_class& e) {
  return CircleSet::arc(pt(s), pt(e), kAlpha);
}
RotationGraphing quarter() { return RotationGraphing(pt(mpq_class(1, 4)), kAlpha); }

const mpq_class q1(1, 4), q2(1, 2), q3(3, 4);

}  // namespace

TEST(RotationGraphing, RejectsDegenerateSteps) {
  EXPECT_THROW(RotationGraphing(pt(0), kAlpha), InvalidArgument);
  EXPECT_THROW(RotationGraphing(pt(mpq_class(1, 2)), kAlpha), InvalidArgument);
  EXPECT_EQ(RotationGraphing::irrational_cycle(kAlpha).beta(), pt(0, 1));
}

TEST(Graphing, Neighborhood) {
  const RotationGraphing g = quarter();
  EXPECT_TRUE(neighborhood_set(g, CircleSet::empty(kAlpha)).is_empty());
  EXPECT_EQ(neighborhood_set(g, arc(0, q1)), unite(arc(q1, q2), arc(q3, 1)));
  EXPECT_TRUE(neighborhood_set(g, CircleSet::full(kAlpha)).is_full());
}

TEST(Graphing, FourCycleLabeling) {
  const RotationGraphing g = quarter();
  const Labeling f = Labeling::from_ones_twos(arc(q2, q3), arc(0, q1));
  EXPECT_EQ(f.zeros(), unite(arc(q1, q2), arc(q3, 1)));
  const DominationReport r = is_rdf(g, f);
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.measured_value, QAlpha(mpq_class(3, 4)));
  EXPECT_TRUE(social_set(g, f).is_empty());
  EXPECT_TRUE(needy_set(g, f).is_empty());
}

TEST(Graphing, FullTwos) {
  const RotationGraphing g = RotationGraphing::irrational_cycle(kAlpha);
  const Labeling f(CircleSet::empty(kAlpha), CircleSet::empty(kAlpha), CircleSet::full(kAlpha));
  const DominationReport r = is_rdf(g, f);
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.measured_value, QAlpha(2));
  EXPECT_TRUE(social_set(g, f).is_full());
  EXPECT_EQ(social_set(g, f).measure(), QAlpha(1));
  EXPECT_TRUE(needy_set(g, f).is_empty());
}

TEST(Graphing, MissingOnes) {
  const RotationGraphing g = quarter();
  const Labeling f = Labeling::from_ones_twos(CircleSet::empty(kAlpha), arc(0, q1));
  const DominationReport r = is_rdf(g, f);
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.violating_set, arc(q2, q3));
  EXPECT_EQ(r.measured_value, QAlpha(q2));
  EXPECT_FALSE(is_rdf(g, f, DominationMode::almost_everywhere).valid);
}

TEST(Graphing, SocialAndNeedyExamples) {
  const RotationGraphing g = quarter();
  const Labeling half = Labeling::from_ones_twos(CircleSet::empty(kAlpha), arc(0, q2));
  EXPECT_EQ(social_set(g, half), arc(0, q2));
  const Labeling alternating =
      Labeling::from_ones_twos(CircleSet::empty(kAlpha), unite(arc(0, q1), arc(q2, q3)));
  EXPECT_EQ(needy_set(g, alternating), unite(arc(q1, q2), arc(q3, 1)));
}

TEST(Graphing, PartitionViolations) {
  EXPECT_THROW(Labeling(arc(q2, 1), arc(0, q1), arc(mpq_class(1, 8), q2)), PartitionViolation);
  EXPECT_THROW(Labeling(arc(q2, 1), CircleSet::empty(kAlpha), arc(0, q1)), PartitionViolation);
  EXPECT_THROW(Labeling(CircleSet::empty(AlphaSpec::sqrt2m1()), CircleSet::empty(kAlpha),
                        CircleSet::full(kAlpha)),
               PartitionViolation);
  EXPECT_THROW(Labeling::from_ones_twos(arc(0, q2), arc(q1, q3)), PartitionViolation);
}

TEST(Graphing, EdgeMeasureExamples) {
  const RotationGraphing g = quarter();
  const CircleSet full = CircleSet::full(kAlpha);
  const EdgeMeasure all = edge_measure_identity(g, full, full);
  EXPECT_EQ(all.lhs, QAlpha(2));
  EXPECT_EQ(all.rhs, QAlpha(2));
  const EdgeMeasure half = edge_measure_identity(g, arc(0, q2), arc(0, q2));
  EXPECT_EQ(half.lhs, QAlpha(q2));
  EXPECT_EQ(half.rhs, QAlpha(q2));
  const EdgeMeasure none = edge_measure_identity(g, CircleSet::empty(kAlpha), arc(0, q2));
  EXPECT_EQ(none.lhs, QAlpha(0));
  EXPECT_EQ(none.rhs, QAlpha(0));
}

TEST(Graphing, LowerBound) {
  EXPECT_EQ(rdm_lower_bound(2), mpq_class(2, 3));
  EXPECT_EQ(rdm_lower_bound(0), mpq_class(1));
  EXPECT_EQ(rdm_lower_bound(3), mpq_class(1, 2));
  // Oracle: enumerate the vertices of the feasible region of
  // min m1 + 2 m2, m1 + (D+1) m2 >= 1, m >= 0.
  for (unsigned d = 0; d <= 12; ++d) {
    const mpq_class only_ones(1);
    mpq_class only_twos(2, d + 1);
    only_twos.canonicalize();
    EXPECT_EQ(rdm_lower_bound(d), only_ones < only_twos ? only_ones : only_twos);
  }
}

TEST(Graphing, InvarianceDefect) {
  EXPECT_EQ(invariance_defect(CircleSet::full(kAlpha), pt(0, 3)), QAlpha(0));
  EXPECT_EQ(invariance_defect(arc(0, q1), pt(q2)), QAlpha(q2));
  EXPECT_EQ(invariance_defect(unite(arc(0, q1), arc(q2, q3)), pt(q2)), QAlpha(0));
}

TEST(GraphingProperty, NeighborhoodBoundAndEdgeIdentity) {
  std::mt19937_64 rng(99);
  const RotationGraphing g = RotationGraphing::irrational_cycle(kAlpha);
  for (int trial = 0; trial < 200; ++trial) {
    const CircleSet a = experiments::random_circle_set(rng, kAlpha);
    const CircleSet b = experiments::random_circle_set(rng, kAlpha);
    EXPECT_TRUE(less_equal(neighborhood_set(g, a).measure(), mpq_class(3) * a.measure(), kAlpha));
    const EdgeMeasure em = edge_measure_identity(g, a, b);
    EXPECT_EQ(em.lhs, em.rhs);
    // Oracle for the lhs: integral over a of deg_b, by midpoint sampling at
    // fine resolution.
    const int n = 4000;
    double integral = 0;
    for (int i = 0; i < n; ++i) {
      const CirclePoint x = pt(mpq_class(2 * i + 1, 2 * n));
      if (!a.contains(x)) continue;
      integral += (b.contains(add(x, g.beta(), kAlpha)) ? 1 : 0) +
                  (b.contains(add(x, g.minus_beta(), kAlpha)) ? 1 : 0);
    }
    EXPECT_NEAR(integral / n, em.lhs.approx(kAlpha), 0.02);
  }
}

TEST(GraphingProperty, SocialNeedyMatchSampling) {
  std::mt19937_64 rng(5);
  const RotationGraphing g = RotationGraphing::irrational_cycle(kAlpha);
  for (int trial = 0; trial < 20; ++trial) {
    const CircleSet twos = experiments::random_circle_set(rng, kAlpha);
    const CircleSet ones = difference(experiments::random_circle_set(rng, kAlpha), twos);
    const Labeling f = Labeling::from_ones_twos(ones, twos);
    const CircleSet social = social_set(g, f);
    const CircleSet needy = needy_set(g, f);
    for (int i = 0; i < 500; ++i) {
      const CirclePoint x = pt(mpq_class(static_cast<long>(rng() % 1000003), 1000003));
      const bool two = twos.contains(x);
      const bool zero = f.zeros().contains(x);
      const bool left = twos.contains(add(x, g.minus_beta(), kAlpha));
      const bool right = twos.contains(add(x, g.beta(), kAlpha));
      EXPECT_EQ(social.contains(x), two && (left || right));
      EXPECT_EQ(needy.contains(x), zero && left && right);
    }
    const QAlpha value = f.measured_value();
    EXPECT_TRUE(less_equal(QAlpha(0), value, kAlpha));
    EXPECT_TRUE(less_equal(value, QAlpha(2), kAlpha));
  }
}
