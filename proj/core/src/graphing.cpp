#include "romdom/graphing.hpp"

#include <algorithm>
#include <utility>

#include "romdom/errors.hpp"

namespace romdom {

RotationGraphing::RotationGraphing(CirclePoint beta, AlphaSpec alpha)
    : beta_(std::move(beta)), alpha_(std::move(alpha)) {
  if (!alpha_.irrational()) {
    throw InvalidArgument("rotation graphings need an irrational alpha");
  }
  if (beta_.is_zero()) throw InvalidArgument("beta must be nonzero");
  if (beta_.q() == 0 && beta_.p() == mpq_class(1, 2)) {
    throw InvalidArgument("beta = 1/2 makes the graph 1-regular");
  }
  minus_beta_ = negate(beta_, alpha_);
}

RotationGraphing RotationGraphing::irrational_cycle(const AlphaSpec& alpha) {
  return RotationGraphing(CirclePoint::alpha_multiple(1, alpha), alpha);
}

Labeling::Labeling(CircleSet zeros, CircleSet ones, CircleSet twos)
    : l0_(std::move(zeros)), l1_(std::move(ones)), l2_(std::move(twos)) {
  if (!l0_.alpha().same_number(l1_.alpha()) || !l0_.alpha().same_number(l2_.alpha())) {
    throw PartitionViolation("label sets use different alpha values");
  }
  const CircleSet l01 = intersect(l0_, l1_);
  const CircleSet l02 = intersect(l0_, l2_);
  const CircleSet l12 = intersect(l1_, l2_);
  if (!l01.is_empty()) throw PartitionViolation("labels 0 and 1 overlap on " + l01.to_string());
  if (!l02.is_empty()) throw PartitionViolation("labels 0 and 2 overlap on " + l02.to_string());
  if (!l12.is_empty()) throw PartitionViolation("labels 1 and 2 overlap on " + l12.to_string());
  const CircleSet missing = complement(unite(unite(l0_, l1_), l2_));
  if (!missing.is_empty()) {
    throw PartitionViolation("no label assigned on " + missing.to_string());
  }
}

Labeling Labeling::from_ones_twos(const CircleSet& ones, const CircleSet& twos) {
  return Labeling(complement(unite(ones, twos)), ones, twos);
}

QAlpha Labeling::measured_value() const {
  return mpq_class(2) * l2_.measure() + l1_.measure();
}

CircleSet neighborhood_set(const RotationGraphing& g, const CircleSet& a) {
  return unite(translate(a, g.beta()), translate(a, g.minus_beta()));
}

DominationReport is_rdf(const RotationGraphing& g, const Labeling& f,
                        DominationMode mode) {
  DominationReport report{
      .valid = false,
      .violating_set = difference(f.zeros(), neighborhood_set(g, f.twos())),
      .measured_value = f.measured_value(),
      .social_measure = social_set(g, f).measure(),
      .needy_measure = needy_set(g, f).measure(),
  };
  report.valid = mode == DominationMode::exact ? report.violating_set.is_empty()
                                               : report.violating_set.measure().is_zero();
  return report;
}

CircleSet social_set(const RotationGraphing& g, const Labeling& f) {
  return intersect(f.twos(), neighborhood_set(g, f.twos()));
}

CircleSet needy_set(const RotationGraphing& g, const Labeling& f) {
  return intersect(f.zeros(), intersect(translate(f.twos(), g.beta()),
                                        translate(f.twos(), g.minus_beta())));
}

EdgeMeasure edge_measure_identity(const RotationGraphing& g, const CircleSet& a,
                                  const CircleSet& b) {
  // deg_B(v) = [v + beta in B] + [v - beta in B], so the integral over A is
  // mu(A ∩ (B - beta)) + mu(A ∩ (B + beta)).
  auto integral = [&](const CircleSet& over, const CircleSet& target) {
    return intersect(over, translate(target, g.minus_beta())).measure() +
           intersect(over, translate(target, g.beta())).measure();
  };
  return EdgeMeasure{integral(a, b), integral(b, a)};
}

mpq_class rdm_lower_bound(unsigned max_degree) {
  // Vertices of the feasible region: (1, 0) and (0, 1/(D+1)).
  const mpq_class all_ones(1);
  mpq_class all_twos(2, max_degree + 1);
  all_twos.canonicalize();
  return std::min(all_ones, all_twos);
}

QAlpha invariance_defect(const CircleSet& s, const CirclePoint& step) {
  return symmetric_difference(s, translate(s, step)).measure();
}

}  // namespace romdom
