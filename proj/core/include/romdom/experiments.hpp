#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "romdom/alpha.hpp"
#include "romdom/circle.hpp"
#include "romdom/qalpha.hpp"

namespace romdom::experiments {

struct Convergent {
  mpz_class p;
  mpz_class q;
};

// Convergents p_n/q_n of [0; a1, a2, ...] for n >= 1, i.e. starting with
// 1/a1. The trivial 0/1 is skipped so denominators strictly increase. Each
// entry's |alpha - p/q| < 1/q^2 is certified; a rational alpha yields at most
// as many entries as its expansion has.
std::vector<Convergent> convergents(const AlphaSpec& alpha, std::size_t count);

enum class Relation { equal, less_equal };

struct ExactValue {
  std::string name;
  QAlpha value;
  std::string symbolic;  // QAlpha::to_string()
  std::string decimal;   // 12 significant digits
};

// A named comparison between two exact values of the same record.
struct Check {
  std::string name;
  std::string lhs;
  Relation relation = Relation::less_equal;
  std::string rhs;
  bool passed = false;
};

// One row of experiment output. Every check is recomputable from the exact
// values it names.
struct ExperimentRecord {
  std::string experiment;
  std::size_t trial = 0;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<ExactValue> values;
  std::vector<Check> checks;

  void add_param(std::string key, std::string value);
  void add_value(std::string name, const QAlpha& value, const AlphaSpec& alpha);
  // Evaluates and stores the check.
  void add_check(std::string name, std::string lhs, Relation relation, std::string rhs,
                 const AlphaSpec& alpha);

  const ExactValue* find_value(std::string_view name) const;
  bool passed() const;
};

// Re-derives a check from the record's exact values.
bool recheck(const ExperimentRecord& record, const Check& check, const AlphaSpec& alpha);

// nRDN of the cycle on q vertices against 2/3 for each convergent
// denominator 3 <= q <= max_denominator (cycles need three vertices).
std::vector<ExperimentRecord> convergence_run(const AlphaSpec& alpha,
                                              const mpz_class& max_denominator);

enum class PropertyKind { parsprototo, edge_measure, scheme_audit };

std::optional<PropertyKind> parse_property_kind(std::string_view name);
std::string property_kind_name(PropertyKind kind);

struct SweepFailure {
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  std::string description;
};

struct SweepResult {
  std::vector<ExperimentRecord> records;
  std::optional<SweepFailure> failure;  // first failing trial; the sweep stops there

  bool passed() const { return !failure.has_value(); }
};

// Deterministic for a given seed. parsprototo and edge_measure run on the
// irrational cycle graph of alpha; scheme_audit draws eps = 1/m with
// m in [5, 40] and K = 3j with j in [1, 20].
SweepResult property_sweep(PropertyKind kind, std::size_t trials, std::uint64_t seed,
                           const AlphaSpec& alpha = AlphaSpec::golden());

// Scheme reports across eps values, K = 3 * ceil(10 / eps) unless given.
std::vector<ExperimentRecord> scheme_sweep(const AlphaSpec& alpha,
                                           std::span<const mpq_class> epsilons,
                                           std::optional<unsigned> depth = std::nullopt);

// Uniform integer in [lo, hi] from a 64-bit Mersenne twister. Implemented
// here so output does not depend on the standard library's distributions.
long long uniform_int(std::mt19937_64& rng, long long lo, long long hi);

// 1 to 8 arcs whose endpoints are i/16 + j*alpha with i in [0,16) and j in
// [-3, 3].
CircleSet random_circle_set(std::mt19937_64& rng, const AlphaSpec& alpha);

// CSV: header row, one record per line, exact fields as p/q (or p/q+ka),
// decimals at 12 significant digits. All records must share a schema.
void write_csv(std::ostream& out, std::span<const ExperimentRecord> records);
// JSON array of objects with the same fields as the CSV.
void write_json(std::ostream& out, std::span<const ExperimentRecord> records);
// Aligned human-readable table.
void write_text(std::ostream& out, std::span<const ExperimentRecord> records);

}  // namespace romdom::experiments
