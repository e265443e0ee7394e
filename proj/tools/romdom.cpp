// romdom: exact Roman domination on rotation graphings and finite graphs.
//
// Exit codes:
//   0  success (verify also exits 0 when the labeling is not an RDF)
//   1  usage error or invalid parameter
//   2  input file does not parse
//   3  instance exceeds the exhaustive-search cap
//   4  precision exhausted while certifying an ordering
//   5  labeling sets do not partition the circle
//   6  an experiment check failed
//   7  internal error

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "romdom/alpha.hpp"
#include "romdom/circle.hpp"
#include "romdom/errors.hpp"
#include "romdom/experiments.hpp"
#include "romdom/finite.hpp"
#include "romdom/graphing.hpp"
#include "romdom/io.hpp"
#include "romdom/qalpha.hpp"
#include "romdom/scheme.hpp"

namespace {

using namespace romdom;
using json = nlohmann::ordered_json;

enum Exit {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kTooLarge = 3,
  kPrecision = 4,
  kPartition = 5,
  kCheckFailed = 6,
  kInternal = 7,
};

// Flat key/value report rendered as text, CSV or JSON.
class Report {
 public:
  void add(const std::string& key, const std::string& value) {
    fields_.push_back({key, value, json(value)});
  }
  void add(const std::string& key, bool value) {
    fields_.push_back({key, value ? "true" : "false", json(value)});
  }
  void add(const std::string& key, unsigned long value) {
    fields_.push_back({key, std::to_string(value), json(value)});
  }
  void add_exact(const std::string& key, const QAlpha& value, const AlphaSpec& alpha) {
    add(key, value.to_string());
    const std::string dec = value.decimal(alpha, 12);
    fields_.push_back({key + "_dec", dec, json(std::stod(dec))});
  }

  void write(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      json obj;
      for (const auto& f : fields_) obj[f.key] = f.value;
      out << obj.dump(2) << '\n';
    } else if (format == "csv") {
      for (std::size_t i = 0; i < fields_.size(); ++i) out << (i ? "," : "") << csv(fields_[i].key);
      out << '\n';
      for (std::size_t i = 0; i < fields_.size(); ++i) out << (i ? "," : "") << csv(fields_[i].text);
      out << '\n';
    } else {
      for (const auto& f : fields_) out << f.key << ": " << f.text << '\n';
    }
  }

 private:
  struct Field {
    std::string key;
    std::string text;
    json value;
  };

  static std::string csv(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + '"';
  }

  std::vector<Field> fields_;
};

struct Globals {
  std::string alpha = "golden";
  unsigned precision = kDefaultPrecisionBits;
  unsigned max_precision = kMaxPrecisionBits;
  std::string format = "text";
  std::string out;
};

AlphaSpec make_alpha(const Globals& g) {
  return AlphaSpec::parse(g.alpha).with_precision(g.precision, g.max_precision);
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  const bool shape_ok = !text.empty() && text.find_first_not_of("+-0123456789/") == std::string::npos;
  if (!shape_ok || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw InvalidArgument("expected a rational p/q, got '" + text + "'");
  }
  q.canonicalize();
  return q;
}

// Writes to --out if given, otherwise stdout.
template <class F>
void emit(const Globals& g, F&& write) {
  if (g.out.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open output file " + g.out);
  write(file);
}

std::string labels_string(const finite::FiniteRdf& f) {
  std::string out;
  for (std::size_t i = 0; i < f.labels.size(); ++i) {
    if (i) out += ' ';
    out += static_cast<char>('0' + f.labels[i]);
  }
  return out;
}

int cmd_solve(const Globals& g, const std::string& path, std::size_t cap) {
  const finite::FiniteGraph graph = io::read_graph_file(path);
  if (graph.size() == 0) throw InvalidArgument("graph has no vertices");
  const finite::RdnResult rdn = finite::roman_domination(graph, cap);
  mpq_class normalized(rdn.value, static_cast<unsigned long>(graph.size()));
  normalized.canonicalize();
  const AlphaSpec alpha = AlphaSpec::golden();  // only used for decimal rendering

  Report r;
  r.add("vertices", static_cast<unsigned long>(graph.size()));
  r.add("edges", static_cast<unsigned long>(graph.edge_count()));
  r.add("rdn", static_cast<unsigned long>(rdn.value));
  r.add_exact("nrdn", normalized, alpha);
  r.add("domination_number", static_cast<unsigned long>(finite::domination_number(graph, cap)));
  r.add("roman", finite::is_roman_graph(graph, cap));
  r.add("witness", labels_string(rdn.witness));
  emit(g, [&](std::ostream& out) { r.write(out, g.format); });
  return kOk;
}

int cmd_scheme(const Globals& g, const std::string& epsilon, std::optional<unsigned> depth,
               bool with_arcs) {
  const AlphaSpec alpha = make_alpha(g);
  const mpq_class eps = parse_rational(epsilon);
  const SchemeParams params = depth ? SchemeParams{alpha, eps, *depth}
                                    : SchemeParams::with_default_depth(alpha, eps);
  params.validate();
  const SchemeResult scheme = build_scheme(params);
  const SchemeReport& rep = scheme.report;

  Report r;
  r.add("alpha", alpha.name());
  r.add("epsilon", rational_string(params.epsilon));
  r.add("depth", static_cast<unsigned long>(params.depth));
  r.add_exact("x_measure", rep.x_measure, alpha);
  r.add_exact("x_bound", rep.x_bound, alpha);
  r.add_exact("uncovered_measure", rep.uncovered_measure, alpha);
  r.add_exact("completed_value", rep.completed_value, alpha);
  r.add_exact("value_bound", rep.value_bound, alpha);
  r.add_exact("gap_to_lower_bound", rep.completed_value - QAlpha(mpq_class(2, 3)), alpha);
  const auto cover = scheme.levels.full_cover_depth;
  r.add("full_cover_depth", cover ? std::to_string(*cover) : std::string("none"));
  r.add("domination_valid", rep.domination_valid);
  r.add("bound_satisfied", rep.bound_satisfied());
  if (with_arcs) r.add("l2_arcs", io::format_arcs(scheme.labeling.twos()));
  emit(g, [&](std::ostream& out) { r.write(out, g.format); });
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& path, const std::string& beta_flag,
               const std::string& mode) {
  const AlphaSpec alpha = make_alpha(g);
  const io::LabelingFile file = io::read_labeling_file(path, alpha);
  CirclePoint beta = CirclePoint::alpha_multiple(1, alpha);
  if (!beta_flag.empty()) {
    beta = io::parse_point(beta_flag, alpha);
  } else if (file.beta) {
    beta = *file.beta;
  }
  const RotationGraphing graph(beta, alpha);
  const Labeling labeling(file.l0, file.l1, file.l2);
  const DominationMode dm =
      mode == "ae" ? DominationMode::almost_everywhere : DominationMode::exact;
  const DominationReport rep = is_rdf(graph, labeling, dm);

  Report r;
  r.add("beta", beta.to_string());
  r.add("partition", std::string("ok"));
  r.add("mode", mode);
  r.add("is_rdf", rep.valid);
  r.add("violating_arcs", io::format_arcs(rep.violating_set));
  r.add_exact("violating_measure", rep.violating_set.measure(), alpha);
  r.add_exact("measured_value", rep.measured_value, alpha);
  r.add_exact("social_measure", rep.social_measure, alpha);
  r.add_exact("needy_measure", rep.needy_measure, alpha);
  emit(g, [&](std::ostream& out) { r.write(out, g.format); });
  return kOk;
}

struct ExperimentFlags {
  std::string kind;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::string max_q = "1000";
  std::string epsilons = "1/10,1/30,1/100";
  std::optional<unsigned> depth;
};

int cmd_experiments(const Globals& g, const ExperimentFlags& f) {
  const AlphaSpec alpha = make_alpha(g);
  std::vector<experiments::ExperimentRecord> records;
  std::optional<experiments::SweepFailure> failure;

  if (f.kind == "convergence") {
    const mpz_class max_q(f.max_q);
    records = experiments::convergence_run(alpha, max_q);
  } else if (f.kind == "scheme") {
    std::vector<mpq_class> eps;
    std::stringstream list(f.epsilons);
    for (std::string item; std::getline(list, item, ',');) eps.push_back(parse_rational(item));
    records = experiments::scheme_sweep(alpha, eps, f.depth);
  } else if (const auto kind = experiments::parse_property_kind(f.kind)) {
    auto sweep = experiments::property_sweep(*kind, f.trials, f.seed, alpha);
    records = std::move(sweep.records);
    failure = sweep.failure;
  } else {
    throw InvalidArgument("unknown experiment '" + f.kind +
                          "'; expected convergence, scheme, parsprototo, edge_measure or "
                          "scheme_audit");
  }

  emit(g, [&](std::ostream& out) {
    if (g.format == "json") {
      experiments::write_json(out, records);
    } else if (g.format == "csv") {
      experiments::write_csv(out, records);
    } else {
      experiments::write_text(out, records);
    }
  });

  if (failure) {
    std::cerr << "romdom: " << failure->description << "; reproduce with --seed "
              << failure->seed << " --trials " << failure->trial + 1 << '\n';
    return kCheckFailed;
  }
  for (const auto& r : records) {
    if (!r.passed()) {
      std::cerr << "romdom: " << r.experiment << " check failed at trial " << r.trial << '\n';
      return kCheckFailed;
    }
  }
  return kOk;
}

int cmd_lower_bound(const Globals& g, unsigned delta) {
  const mpq_class bound = rdm_lower_bound(delta);
  emit(g, [&](std::ostream& out) {
    if (g.format == "text") {
      out << rational_string(bound) << '\n';
      return;
    }
    Report r;
    r.add("delta", static_cast<unsigned long>(delta));
    r.add_exact("lower_bound", bound, AlphaSpec::golden());
    r.write(out, g.format);
  });
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact Roman domination on rotation graphings and finite graphs."};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(
      "Exit codes: 0 ok, 1 usage, 2 parse error, 3 instance too large, 4 precision "
      "exhausted, 5 partition violation, 6 experiment check failed, 7 internal error.");

  Globals g;
  app.add_option("--alpha", g.alpha,
                 "Rotation number: golden, sqrt2m1 or cf:0,a1,...,an[,...] (trailing ... "
                 "repeats a1..an)")
      ->capture_default_str();
  app.add_option("--precision", g.precision, "Starting MPFR precision in bits")
      ->capture_default_str()
      ->check(CLI::Range(kMinPrecisionBits, kMaxPrecisionBits * 64));
  app.add_option("--max-precision", g.max_precision, "Maximum MPFR precision in bits")
      ->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", g.out, "Write output to this file instead of stdout");

  std::size_t cap = finite::kDefaultBruteForceCap;
  std::string graph_path;
  auto* solve = app.add_subcommand("solve", "Roman domination of a finite graph file");
  solve->add_option("graph", graph_path, "Graph file: 'n m' then m lines 'u v'")->required();
  solve->add_option("--cap", cap, "Largest component sent to exhaustive search")
      ->capture_default_str();

  std::string epsilon = "1/100";
  std::optional<unsigned> depth;
  bool with_arcs = false;
  auto* scheme = app.add_subcommand("scheme", "Build and verify the epsilon-scheme on G_alpha");
  scheme->add_option("--epsilon", epsilon, "Base arc length p/q")->capture_default_str();
  scheme->add_option("--depth", depth, "Truncation depth K, a multiple of 3 (default 3*ceil(10/eps))");
  scheme->add_flag("--arcs", with_arcs, "Also print the arcs of the label-2 set");

  std::string labeling_path;
  std::string beta_flag;
  std::string mode = "exact";
  auto* verify = app.add_subcommand("verify", "Check a measurable labeling file");
  verify->add_option("labeling", labeling_path, "Labeling file with l0:, l1:, l2: arc lists")
      ->required();
  verify->add_option("--beta", beta_flag,
                     "Rotation step, overrides the file (default: the file's beta, else alpha)");
  verify->add_option("--mode", mode, "exact: violating set empty; ae: violating set null")
      ->capture_default_str()
      ->check(CLI::IsMember({"exact", "ae"}));

  ExperimentFlags ef;
  auto* exps = app.add_subcommand("experiments", "Run an experiment and emit its records");
  exps->add_option("kind", ef.kind,
                   "convergence, scheme, parsprototo, edge_measure or scheme_audit")
      ->required();
  exps->add_option("--trials", ef.trials, "Trials for property sweeps")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  exps->add_option("--seed", ef.seed, "Seed for property sweeps")->capture_default_str();
  exps->add_option("--max-q", ef.max_q, "Largest convergent denominator for convergence")
      ->capture_default_str();
  exps->add_option("--epsilons", ef.epsilons, "Comma-separated eps values for scheme")
      ->capture_default_str();
  exps->add_option("--depth", ef.depth, "Fixed depth K for scheme (default 3*ceil(10/eps))");

  unsigned delta = 2;
  auto* lower = app.add_subcommand("lower-bound", "Lower bound on the measured value of any RDF");
  lower->add_option("--delta", delta, "Maximum degree")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*solve) return cmd_solve(g, graph_path, cap);
  if (*scheme) return cmd_scheme(g, epsilon, depth, with_arcs);
  if (*verify) return cmd_verify(g, labeling_path, beta_flag, mode);
  if (*exps) {
    if (ef.max_q.empty() || ef.max_q.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidArgument("--max-q expects a positive integer, got '" + ef.max_q + "'");
    }
    return cmd_experiments(g, ef);
  }
  return cmd_lower_bound(g, delta);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const romdom::ParseError& e) {
    std::cerr << "romdom: parse error: " << e.what() << '\n';
    return kParse;
  } catch (const romdom::InstanceTooLarge& e) {
    std::cerr << "romdom: instance too large: " << e.what() << '\n';
    return kTooLarge;
  } catch (const romdom::PrecisionExhausted& e) {
    std::cerr << "romdom: precision exhausted: " << e.what() << '\n';
    return kPrecision;
  } catch (const romdom::PartitionViolation& e) {
    std::cerr << "romdom: partition violation: " << e.what() << '\n';
    return kPartition;
  } catch (const romdom::InvalidArgument& e) {
    std::cerr << "romdom: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "romdom: internal error: " << e.what() << '\n';
    return kInternal;
  }
}
