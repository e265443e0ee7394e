#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "romdom/alpha.hpp"
#include "romdom/circle.hpp"
#include "romdom/graphing.hpp"
#include "romdom/qalpha.hpp"

namespace romdom {

// Parameters of the epsilon-scheme on the irrational cycle graph G_alpha.
//
// The hit time d(v) = min{k : v - k*alpha in [0, eps)} is truncated at
// depth K. K must be a positive multiple of 3.
struct SchemeParams {
  AlphaSpec alpha = AlphaSpec::golden();
  mpq_class epsilon{1, 100};
  unsigned depth = 3000;

  // depth = 3 * ceil(10 / epsilon)
  static unsigned default_depth(const mpq_class& epsilon);
  static SchemeParams with_default_depth(const AlphaSpec& alpha, const mpq_class& epsilon);

  // Throws InvalidArgument unless 0 < epsilon < 1, K >= 3 and 3 | K.
  void validate() const;
};

// Minimal k <= K with v - k*alpha in [0, eps), or nullopt.
std::optional<unsigned> hit_time(const CirclePoint& v, const SchemeParams& params);

// Level sets D_k = d^-1{k} for k = 0..K.
struct LevelSets {
  std::vector<CircleSet> levels;
  CircleSet covered;    // union of the levels
  CircleSet uncovered;  // complement of covered
  // Smallest n with C_n = d^-1{0..n} equal to the whole circle.
  std::optional<unsigned> full_cover_depth;
};

LevelSets build_level_sets(const SchemeParams& params);

struct SchemeReport {
  QAlpha x_measure;          // mu(X_K), X_K = union of D_k with 3 | k
  mpq_class x_bound;         // 1/3 + (4/3) eps
  QAlpha uncovered_measure;  // u
  QAlpha completed_value;    // measured value of the final labeling
  QAlpha value_bound;        // 2 * x_bound + 2u
  bool domination_valid = false;
  bool x_bound_satisfied = false;
  bool value_bound_satisfied = false;

  bool bound_satisfied() const { return x_bound_satisfied && value_bound_satisfied; }
};

struct SchemeResult {
  Labeling labeling;  // l2 = X_K ∪ uncovered, l1 = ∅
  SchemeReport report;
  LevelSets levels;
  CircleSet x_set;  // X_K
};

// Builds the truncated scheme and verifies it exactly. Throws
// DominationFailure if the exact domination check fails.
SchemeResult build_scheme(const SchemeParams& params);

struct SchemeAudit {
  QAlpha social_measure;  // social vertices inside the covered region
  QAlpha needy_measure;   // needy vertices inside the covered region
  QAlpha social_total;
  QAlpha needy_total;
  QAlpha social_bound;  // 2 eps + 2u
  QAlpha uncovered_measure;
  bool within_bound = false;
  CircleSet social;  // full social set
  CircleSet needy;   // full needy set
};

SchemeAudit scheme_social_needy_audit(const SchemeParams& params);
SchemeAudit scheme_social_needy_audit(const SchemeResult& scheme, const SchemeParams& params);

}  // namespace romdom
