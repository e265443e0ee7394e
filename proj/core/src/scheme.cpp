#include "romdom/scheme.hpp"

#include <utility>

#include "romdom/errors.hpp"

namespace romdom {

unsigned SchemeParams::default_depth(const mpq_class& epsilon) {
  if (epsilon <= 0) throw InvalidArgument("epsilon must be positive");
  const mpq_class ratio = mpq_class(10) / epsilon;
  mpz_class ceiling;
  mpz_cdiv_q(ceiling.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  if (!ceiling.fits_uint_p() || ceiling.get_ui() > (1u << 30)) {
    throw InvalidArgument("epsilon too small for the default depth");
  }
  return 3 * static_cast<unsigned>(ceiling.get_ui());
}

SchemeParams SchemeParams::with_default_depth(const AlphaSpec& alpha,
                                              const mpq_class& epsilon) {
  return SchemeParams{alpha, epsilon, default_depth(epsilon)};
}

void SchemeParams::validate() const {
  if (!alpha.irrational()) throw InvalidArgument("the scheme needs an irrational alpha");
  if (epsilon <= 0 || epsilon >= 1) {
    throw InvalidArgument("epsilon must lie strictly between 0 and 1");
  }
  if (depth < 3 || depth % 3 != 0) {
    throw InvalidArgument("depth K must be a positive multiple of 3, got " +
                          std::to_string(depth));
  }
}

std::optional<unsigned> hit_time(const CirclePoint& v, const SchemeParams& params) {
  const AlphaSpec& alpha = params.alpha;
  const CirclePoint eps = CirclePoint::rational(params.epsilon);
  const CirclePoint step = CirclePoint::alpha_multiple(-1, alpha);
  CirclePoint w = v;
  for (unsigned k = 0; k <= params.depth; ++k) {
    if (point_compare(w, eps, alpha) < 0) return k;
    w = add(w, step, alpha);
  }
  return std::nullopt;
}

LevelSets build_level_sets(const SchemeParams& params) {
  params.validate();
  const AlphaSpec& alpha = params.alpha;
  const CircleSet base =
      CircleSet::arc(CirclePoint{}, CirclePoint::rational(params.epsilon), alpha);

  LevelSets out{.levels = {},
                .covered = CircleSet::empty(alpha),
                .uncovered = CircleSet::empty(alpha),
                .full_cover_depth = std::nullopt};
  out.levels.reserve(params.depth + 1);
  CircleSet& cover = out.covered;
  for (unsigned n = 0; n <= params.depth; ++n) {
    if (out.full_cover_depth) {
      out.levels.push_back(CircleSet::empty(alpha));
      continue;
    }
    const CircleSet shifted =
        translate(base, CirclePoint::alpha_multiple(static_cast<long long>(n), alpha));
    CircleSet level = difference(shifted, cover);
    cover = unite(cover, level);
    out.levels.push_back(std::move(level));
    if (cover.is_full()) out.full_cover_depth = n;
  }
  out.uncovered = complement(cover);
  return out;
}

SchemeResult build_scheme(const SchemeParams& params) {
  LevelSets levels = build_level_sets(params);
  const AlphaSpec& alpha = params.alpha;

  CircleSet x_set = CircleSet::empty(alpha);
  for (std::size_t k = 0; k < levels.levels.size(); k += 3) {
    x_set = unite(x_set, levels.levels[k]);
  }
  const CircleSet twos = unite(x_set, levels.uncovered);
  Labeling labeling = Labeling::from_ones_twos(CircleSet::empty(alpha), twos);

  SchemeReport report;
  report.x_measure = x_set.measure();
  report.x_bound = mpq_class(1, 3) + mpq_class(4, 3) * params.epsilon;
  report.x_bound.canonicalize();
  report.uncovered_measure = levels.uncovered.measure();
  report.completed_value = labeling.measured_value();
  report.value_bound = QAlpha(mpq_class(2) * report.x_bound) +
                       mpq_class(2) * report.uncovered_measure;

  const DominationReport check = is_rdf(RotationGraphing::irrational_cycle(alpha), labeling);
  if (!check.valid) {
    throw DominationFailure("scheme labeling leaves " + check.violating_set.to_string() +
                            " undominated");
  }
  report.domination_valid = true;
  report.x_bound_satisfied = less_equal(report.x_measure, report.x_bound, alpha);
  report.value_bound_satisfied =
      less_equal(report.completed_value, report.value_bound, alpha);

  return SchemeResult{std::move(labeling), std::move(report), std::move(levels),
                      std::move(x_set)};
}

SchemeAudit scheme_social_needy_audit(const SchemeResult& scheme,
                                      const SchemeParams& params) {
  const AlphaSpec& alpha = params.alpha;
  const RotationGraphing g = RotationGraphing::irrational_cycle(alpha);
  CircleSet social = social_set(g, scheme.labeling);
  CircleSet needy = needy_set(g, scheme.labeling);
  const CircleSet& covered = scheme.levels.covered;

  SchemeAudit audit{
      .social_measure = intersect(social, covered).measure(),
      .needy_measure = intersect(needy, covered).measure(),
      .social_total = social.measure(),
      .needy_total = needy.measure(),
      .social_bound = QAlpha(mpq_class(2) * params.epsilon) +
                      mpq_class(2) * scheme.report.uncovered_measure,
      .uncovered_measure = scheme.report.uncovered_measure,
      .within_bound = false,
      .social = std::move(social),
      .needy = std::move(needy),
  };
  audit.within_bound = less_equal(audit.social_measure, audit.social_bound, alpha);
  return audit;
}

SchemeAudit scheme_social_needy_audit(const SchemeParams& params) {
  return scheme_social_needy_audit(build_scheme(params), params);
}

}  // namespace romdom
