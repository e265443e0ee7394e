#include "romdom/experiments.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "romdom/errors.hpp"
#include "romdom/finite.hpp"
#include "romdom/graphing.hpp"
#include "romdom/scheme.hpp"

namespace romdom::experiments {

namespace {

// Convergent recurrence h_n = a_n h_{n-1} + h_{n-2}, likewise k_n.
class ConvergentStream {
 public:
  explicit ConvergentStream(const AlphaSpec& alpha) : alpha_(alpha) {}

  std::optional<Convergent> next() {
    while (true) {
      const std::optional<long long> a = alpha_.term(index_);
      if (!a) return std::nullopt;
      const mpz_class term = static_cast<long>(*a);
      const mpz_class h = term * h1_ + h2_;
      const mpz_class k = term * k1_ + k2_;
      h2_ = h1_;
      h1_ = h;
      k2_ = k1_;
      k1_ = k;
      if (index_++ == 0) continue;  // skip 0/1
      return Convergent{h, k};
    }
  }

 private:
  const AlphaSpec& alpha_;
  std::size_t index_ = 0;
  mpz_class h1_ = 1, h2_ = 0, k1_ = 0, k2_ = 1;
};

void certify(const Convergent& c, const AlphaSpec& alpha) {
  const mpq_class center(c.p, c.q);
  const mpq_class radius(1, c.q * c.q);
  const bool above = alpha.sign(-(center - radius), 1) > 0;
  const bool below = alpha.sign(-(center + radius), 1) < 0;
  if (!above || !below) {
    throw Error("convergent " + c.p.get_str() + "/" + c.q.get_str() +
                " is not within 1/q^2 of alpha");
  }
}

bool evaluate(const QAlpha& lhs, Relation relation, const QAlpha& rhs, const AlphaSpec& alpha) {
  if (relation == Relation::equal) return lhs == rhs;
  return less_equal(lhs, rhs, alpha);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::vector<std::string> header_of(const ExperimentRecord& r) {
  std::vector<std::string> cols{"experiment", "trial"};
  for (const auto& [key, _] : r.params) cols.push_back(key);
  for (const auto& v : r.values) {
    cols.push_back(v.name);
    cols.push_back(v.name + "_dec");
  }
  for (const auto& c : r.checks) cols.push_back(c.name);
  cols.push_back("pass");
  return cols;
}

std::vector<std::string> row_of(const ExperimentRecord& r) {
  std::vector<std::string> row{r.experiment, std::to_string(r.trial)};
  for (const auto& [_, value] : r.params) row.push_back(value);
  for (const auto& v : r.values) {
    row.push_back(v.symbolic);
    row.push_back(v.decimal);
  }
  for (const auto& c : r.checks) row.push_back(c.passed ? "true" : "false");
  row.push_back(r.passed() ? "true" : "false");
  return row;
}

void require_uniform_schema(std::span<const ExperimentRecord> records) {
  if (records.empty()) return;
  const auto header = header_of(records.front());
  for (const auto& r : records) {
    if (header_of(r) != header) {
      throw InvalidArgument("experiment records with different fields cannot share a table");
    }
  }
}

}  // namespace

std::vector<Convergent> convergents(const AlphaSpec& alpha, std::size_t count) {
  if (count == 0) throw InvalidArgument("convergent count must be at least 1");
  std::vector<Convergent> out;
  ConvergentStream stream(alpha);
  while (out.size() < count) {
    auto next = stream.next();
    if (!next) break;
    certify(*next, alpha);
    out.push_back(std::move(*next));
  }
  return out;
}

void ExperimentRecord::add_param(std::string key, std::string value) {
  params.emplace_back(std::move(key), std::move(value));
}

void ExperimentRecord::add_value(std::string name, const QAlpha& value, const AlphaSpec& alpha) {
  values.push_back(ExactValue{std::move(name), value, value.to_string(), value.decimal(alpha, 12)});
}

void ExperimentRecord::add_check(std::string name, std::string lhs, Relation relation,
                                 std::string rhs, const AlphaSpec& alpha) {
  Check check{std::move(name), std::move(lhs), relation, std::move(rhs), false};
  check.passed = recheck(*this, check, alpha);
  checks.push_back(std::move(check));
}

const ExactValue* ExperimentRecord::find_value(std::string_view name) const {
  for (const auto& v : values) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

bool ExperimentRecord::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

bool recheck(const ExperimentRecord& record, const Check& check, const AlphaSpec& alpha) {
  const ExactValue* lhs = record.find_value(check.lhs);
  const ExactValue* rhs = record.find_value(check.rhs);
  if (lhs == nullptr || rhs == nullptr) {
    throw InvalidArgument("check " + check.name + " names a missing value");
  }
  return evaluate(lhs->value, check.relation, rhs->value, alpha);
}

std::vector<ExperimentRecord> convergence_run(const AlphaSpec& alpha,
                                              const mpz_class& max_denominator) {
  std::vector<ExperimentRecord> out;
  ConvergentStream stream(alpha);
  std::size_t trial = 0;
  const mpq_class two_thirds(2, 3);
  while (auto c = stream.next()) {
    if (c->q > max_denominator) break;
    certify(*c, alpha);
    if (c->q < 3) continue;
    if (!c->q.fits_ulong_p()) throw InvalidArgument("denominator too large for the DP");
    const unsigned long q = c->q.get_ui();
    const unsigned rdn = finite::cycle_path_rdn(finite::Shape::cycle, q);
    mpq_class normalized(rdn, q);
    normalized.canonicalize();
    mpq_class bound(2, 3 * q);
    bound.canonicalize();

    ExperimentRecord r;
    r.experiment = "convergence";
    r.trial = trial++;
    r.add_param("alpha", alpha.name());
    r.add_param("p", c->p.get_str());
    r.add_param("q", c->q.get_str());
    r.add_value("rdn", mpq_class(rdn), alpha);
    r.add_value("nrdn", normalized, alpha);
    r.add_value("zero", mpq_class(0), alpha);
    r.add_value("gap", mpq_class(normalized - two_thirds), alpha);
    r.add_value("gap_bound", bound, alpha);
    r.add_check("gap_nonnegative", "zero", Relation::less_equal, "gap", alpha);
    r.add_check("gap_within_bound", "gap", Relation::less_equal, "gap_bound", alpha);
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<PropertyKind> parse_property_kind(std::string_view name) {
  if (name == "parsprototo") return PropertyKind::parsprototo;
  if (name == "edge_measure" || name == "edge-measure") return PropertyKind::edge_measure;
  if (name == "scheme_audit" || name == "scheme-audit") return PropertyKind::scheme_audit;
  return std::nullopt;
}

std::string property_kind_name(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::parsprototo:
      return "parsprototo";
    case PropertyKind::edge_measure:
      return "edge_measure";
    case PropertyKind::scheme_audit:
      return "scheme_audit";
  }
  return "unknown";
}

long long uniform_int(std::mt19937_64& rng, long long lo, long long hi) {
  if (hi < lo) throw InvalidArgument("empty integer range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long long>(rng());  // full 64-bit range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return lo + static_cast<long long>(x % span);
}

CircleSet random_circle_set(std::mt19937_64& rng, const AlphaSpec& alpha) {
  auto draw_point = [&] {
    mpq_class p(static_cast<long>(uniform_int(rng, 0, 15)), 16);
    p.canonicalize();
    return CirclePoint::make(p, uniform_int(rng, -3, 3), alpha);
  };
  const long long count = uniform_int(rng, 1, 8);
  std::vector<Arc> arcs;
  while (static_cast<long long>(arcs.size()) < count) {
    Arc a{draw_point(), draw_point()};
    if (a.start == a.end) continue;
    arcs.push_back(std::move(a));
  }
  return CircleSet::from_arcs(arcs, alpha);
}

SweepResult property_sweep(PropertyKind kind, std::size_t trials, std::uint64_t seed,
                           const AlphaSpec& alpha) {
  if (trials == 0) throw InvalidArgument("a sweep needs at least one trial");
  SweepResult result;
  std::mt19937_64 rng(seed);
  const RotationGraphing g = RotationGraphing::irrational_cycle(alpha);
  const std::string name = property_kind_name(kind);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    ExperimentRecord r;
    r.experiment = name;
    r.trial = trial;
    r.add_param("alpha", alpha.name());
    r.add_param("seed", std::to_string(seed));
    switch (kind) {
      case PropertyKind::parsprototo: {
        const CircleSet a = random_circle_set(rng, alpha);
        r.add_param("arcs", std::to_string(a.arc_count()));
        r.add_value("measure_a", a.measure(), alpha);
        r.add_value("lhs", neighborhood_set(g, a).measure(), alpha);
        r.add_value("rhs", mpq_class(g.degree() + 1) * a.measure(), alpha);
        r.add_check("neighborhood_bound", "lhs", Relation::less_equal, "rhs", alpha);
        break;
      }
      case PropertyKind::edge_measure: {
        const CircleSet a = random_circle_set(rng, alpha);
        const CircleSet b = random_circle_set(rng, alpha);
        r.add_param("arcs", std::to_string(a.arc_count()) + "+" + std::to_string(b.arc_count()));
        const EdgeMeasure em = edge_measure_identity(g, a, b);
        r.add_value("lhs", em.lhs, alpha);
        r.add_value("rhs", em.rhs, alpha);
        r.add_check("edge_measure_equal", "lhs", Relation::equal, "rhs", alpha);
        break;
      }
      case PropertyKind::scheme_audit: {
        const long long m = uniform_int(rng, 5, 40);
        const long long j = uniform_int(rng, 1, 20);
        const SchemeParams params{alpha, mpq_class(1, static_cast<long>(m)), static_cast<unsigned>(3 * j)};
        const SchemeResult scheme = build_scheme(params);
        const SchemeAudit audit = scheme_social_needy_audit(scheme, params);
        r.add_param("epsilon", rational_string(params.epsilon));
        r.add_param("depth", std::to_string(params.depth));
        r.add_value("uncovered", audit.uncovered_measure, alpha);
        r.add_value("needy", audit.needy_measure, alpha);
        r.add_value("lhs", audit.social_measure, alpha);
        r.add_value("rhs", audit.social_bound, alpha);
        r.add_value("x_measure", scheme.report.x_measure, alpha);
        r.add_value("x_bound", scheme.report.x_bound, alpha);
        r.add_check("social_bound", "lhs", Relation::less_equal, "rhs", alpha);
        r.add_check("x_bound", "x_measure", Relation::less_equal, "x_bound", alpha);
        break;
      }
    }
    const bool ok = r.passed();
    result.records.push_back(std::move(r));
    if (!ok) {
      std::ostringstream desc;
      desc << name << " failed at trial " << trial << " (seed " << seed << ")";
      result.failure = SweepFailure{seed, trial, desc.str()};
      break;
    }
  }
  return result;
}

std::vector<ExperimentRecord> scheme_sweep(const AlphaSpec& alpha,
                                           std::span<const mpq_class> epsilons,
                                           std::optional<unsigned> depth) {
  std::vector<ExperimentRecord> out;
  const mpq_class two_thirds(2, 3);
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    const mpq_class& eps = epsilons[i];
    const SchemeParams params{alpha, eps, depth.value_or(SchemeParams::default_depth(eps))};
    const SchemeResult scheme = build_scheme(params);
    const SchemeReport& rep = scheme.report;

    ExperimentRecord r;
    r.experiment = "scheme";
    r.trial = i;
    r.add_param("alpha", alpha.name());
    r.add_param("epsilon", rational_string(eps));
    r.add_param("depth", std::to_string(params.depth));
    r.add_param("domination_valid", rep.domination_valid ? "true" : "false");
    r.add_value("x_measure", rep.x_measure, alpha);
    r.add_value("x_bound", rep.x_bound, alpha);
    r.add_value("uncovered", rep.uncovered_measure, alpha);
    r.add_value("completed_value", rep.completed_value, alpha);
    r.add_value("value_bound", rep.value_bound, alpha);
    r.add_value("gap_to_two_thirds", rep.completed_value - QAlpha(two_thirds), alpha);
    r.add_check("x_within_bound", "x_measure", Relation::less_equal, "x_bound", alpha);
    r.add_check("value_within_bound", "completed_value", Relation::less_equal, "value_bound",
                alpha);
    out.push_back(std::move(r));
  }
  return out;
}

void write_csv(std::ostream& out, std::span<const ExperimentRecord> records) {
  require_uniform_schema(records);
  if (records.empty()) return;
  auto emit = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out << ',';
      out << csv_escape(fields[i]);
    }
    out << '\n';
  };
  emit(header_of(records.front()));
  for (const auto& r : records) emit(row_of(r));
}

void write_json(std::ostream& out, std::span<const ExperimentRecord> records) {
  require_uniform_schema(records);
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json obj;
    obj["experiment"] = r.experiment;
    obj["trial"] = r.trial;
    for (const auto& [key, value] : r.params) obj[key] = value;
    for (const auto& v : r.values) {
      obj[v.name] = v.symbolic;
      obj[v.name + "_dec"] = std::stod(v.decimal);
    }
    for (const auto& c : r.checks) obj[c.name] = c.passed;
    obj["pass"] = r.passed();
    array.push_back(std::move(obj));
  }
  out << array.dump(2) << '\n';
}

void write_text(std::ostream& out, std::span<const ExperimentRecord> records) {
  require_uniform_schema(records);
  if (records.empty()) return;
  std::vector<std::vector<std::string>> rows{header_of(records.front())};
  for (const auto& r : records) rows.push_back(row_of(r));
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << "  ";
      out << row[i];
      if (i + 1 < row.size()) out << std::string(width[i] - row[i].size(), ' ');
    }
    out << '\n';
  }
}

}  // namespace romdom::experiments
