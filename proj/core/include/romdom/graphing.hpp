#pragma once

#include <gmpxx.h>

#include "romdom/alpha.hpp"
#include "romdom/circle.hpp"
#include "romdom/qalpha.hpp"

namespace romdom {

// Graph on R/Z joining v and v +- beta. beta may be rational (finite cycles)
// or the symbolic point alpha (the irrational cycle graph). Always 2-regular;
// beta = 0 and beta = 1/2 are rejected.
class RotationGraphing {
 public:
  RotationGraphing(CirclePoint beta, AlphaSpec alpha);

  static RotationGraphing irrational_cycle(const AlphaSpec& alpha);

  const CirclePoint& beta() const noexcept { return beta_; }
  const CirclePoint& minus_beta() const noexcept { return minus_beta_; }
  const AlphaSpec& alpha() const noexcept { return alpha_; }
  static constexpr unsigned degree() noexcept { return 2; }

 private:
  CirclePoint beta_;
  CirclePoint minus_beta_;
  AlphaSpec alpha_;
};

// Measurable {0,1,2}-labeling given by its three level sets. The constructor
// checks that they partition the circle and throws PartitionViolation
// otherwise.
class Labeling {
 public:
  Labeling(CircleSet zeros, CircleSet ones, CircleSet twos);

  // l0 is the complement of l1 ∪ l2.
  static Labeling from_ones_twos(const CircleSet& ones, const CircleSet& twos);

  const CircleSet& zeros() const noexcept { return l0_; }
  const CircleSet& ones() const noexcept { return l1_; }
  const CircleSet& twos() const noexcept { return l2_; }
  const AlphaSpec& alpha() const noexcept { return l0_.alpha(); }

  // 2 * mu(l2) + mu(l1)
  QAlpha measured_value() const;

 private:
  CircleSet l0_;
  CircleSet l1_;
  CircleSet l2_;
};

enum class DominationMode {
  exact,               // violating set must be empty
  almost_everywhere,   // violating set must be null
};

struct DominationReport {
  bool valid = false;
  CircleSet violating_set;
  QAlpha measured_value;
  QAlpha social_measure;
  QAlpha needy_measure;
};

// Vertices with a neighbour in a: (a + beta) ∪ (a - beta).
CircleSet neighborhood_set(const RotationGraphing& g, const CircleSet& a);

DominationReport is_rdf(const RotationGraphing& g, const Labeling& f,
                        DominationMode mode = DominationMode::exact);

// Label-2 vertices with a label-2 neighbour.
CircleSet social_set(const RotationGraphing& g, const Labeling& f);
// Label-0 vertices whose neighbours both carry label 2.
CircleSet needy_set(const RotationGraphing& g, const Labeling& f);

struct EdgeMeasure {
  QAlpha lhs;  // integral over a of deg_b
  QAlpha rhs;  // integral over b of deg_a
};
EdgeMeasure edge_measure_identity(const RotationGraphing& g, const CircleSet& a,
                                  const CircleSet& b);

// Optimum of min m1 + 2 m2 subject to m1 + (max_degree + 1) m2 >= 1, m >= 0:
// the smallest measured value any Roman dominating function can have on a
// probability graph of that maximum degree.
mpq_class rdm_lower_bound(unsigned max_degree);

// mu(s Δ (s + step)); zero iff s is invariant under the rotation.
QAlpha invariance_defect(const CircleSet& s, const CirclePoint& step);

}  // namespace romdom
