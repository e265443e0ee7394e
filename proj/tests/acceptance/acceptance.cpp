// One line per acceptance criterion; exits nonzero if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "romdom/experiments.hpp"
#include "romdom/finite.hpp"
#include "romdom/graphing.hpp"
#include "romdom/io.hpp"
#include "romdom/scheme.hpp"

#ifndef ROMDOM_CLI
#error "ROMDOM_CLI must name the romdom executable"
#endif
#ifndef ROMDOM_TEST_DATA
#error "ROMDOM_TEST_DATA must name the test data directory"
#endif

using namespace romdom;

namespace {

const AlphaSpec kAlpha = AlphaSpec::golden();

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct CommandResult {
  int status = -1;
  std::string out;
};

CommandResult run_command(const std::string& cmd) {
  CommandResult r;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe.get()) != nullptr) r.out += buf.data();
  const int raw = pclose(pipe.release());
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string cli() { return std::string("\"") + ROMDOM_CLI + "\""; }
std::string data(const std::string& name) {
  return std::string("\"") + ROMDOM_TEST_DATA + "/" + name + "\"";
}

CirclePoint pt(const mpq_class& p, long long q = 0) { return CirclePoint::make(p, q, kAlpha); }

Outcome four_cycle() {
  const mpq_class q1(1, 4), q2(1, 2), q3(3, 4);
  const RotationGraphing g(pt(q1), kAlpha);
  const Labeling f = Labeling::from_ones_twos(CircleSet::arc(pt(q2), pt(q3), kAlpha),
                                              CircleSet::arc(pt(0), pt(q1), kAlpha));
  const DominationReport rep = is_rdf(g, f);
  const CommandResult cmd = run_command(cli() + " verify " + data("four_cycle.labeling"));
  const bool cli_ok = cmd.status == 0 && cmd.out.find("measured_value: 3/4\n") != std::string::npos &&
                      cmd.out.find("is_rdf: true\n") != std::string::npos;
  const bool ok = rep.valid && rep.measured_value == QAlpha(mpq_class(3, 4)) && cli_ok;
  return {ok, "library value " + rep.measured_value.to_string() + ", verify exit " +
                  std::to_string(cmd.status) + (cli_ok ? " value 3/4" : " unexpected output")};
}

Outcome scheme_bound() {
  bool ok = true;
  std::ostringstream d;
  for (long den : {10L, 100L}) {
    const SchemeParams p = SchemeParams::with_default_depth(kAlpha, mpq_class(1, den));
    const auto start = std::chrono::steady_clock::now();
    const SchemeResult s = build_scheme(p);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const RotationGraphing g = RotationGraphing::irrational_cycle(kAlpha);
    const bool dominated = is_rdf(g, s.labeling).violating_set.is_empty();
    const QAlpha x_bound(mpq_class(1, 3) + mpq_class(4, 3) * p.epsilon);
    const QAlpha v_bound = QAlpha(mpq_class(2, 3) + mpq_class(8, 3) * p.epsilon) +
                           mpq_class(2) * s.report.uncovered_measure;
    const bool x_ok = less_equal(s.report.x_measure, x_bound, kAlpha);
    const bool v_ok = less_equal(s.report.completed_value, v_bound, kAlpha);
    ok = ok && dominated && x_ok && v_ok && secs < 60.0;
    d << "eps=1/" << den << " K=" << p.depth << " x=" << s.report.x_measure.decimal(kAlpha, 6)
      << " value=" << s.report.completed_value.decimal(kAlpha, 6) << " u="
      << s.report.uncovered_measure.to_string() << " " << secs << "s" << (den == 10 ? "; " : "");
  }
  return {ok, d.str()};
}

Outcome lower_bound() {
  const CommandResult cmd = run_command(cli() + " lower-bound --delta 2");
  bool ok = cmd.status == 0 && cmd.out == "2/3\n" && rdm_lower_bound(2) == mpq_class(2, 3);
  const std::array<mpq_class, 3> eps{mpq_class(1, 10), mpq_class(1, 30), mpq_class(1, 100)};
  std::ostringstream d;
  d << "lower-bound printed '" << cmd.out.substr(0, cmd.out.find('\n')) << "'; gaps";
  QAlpha previous;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const SchemeResult s = build_scheme(SchemeParams::with_default_depth(kAlpha, eps[i]));
    const QAlpha gap = s.report.completed_value - QAlpha(mpq_class(2, 3));
    if (i > 0) ok = ok && less(gap, previous, kAlpha);
    previous = gap;
    d << " " << gap.decimal(kAlpha, 6);
  }
  return {ok, d.str()};
}

Outcome sweep(experiments::PropertyKind kind) {
  const auto r = experiments::property_sweep(kind, 100, 7, kAlpha);
  const bool ok = r.passed() && r.records.size() == 100;
  return {ok, std::to_string(r.records.size()) + " trials, seed 7, " +
                  (r.failure ? r.failure->description : std::string("zero failures"))};
}

Outcome finite_solver() {
  bool ok = true;
  for (std::size_t n = 3; n <= 12; ++n) {
    ok = ok && finite::cycle_path_rdn(finite::Shape::cycle, n) ==
                   finite::brute_force_rdn(finite::FiniteGraph::cycle(n)).value;
    ok = ok && finite::cycle_path_rdn(finite::Shape::path, n) ==
                   finite::brute_force_rdn(finite::FiniteGraph::path(n)).value;
  }
  const auto records = experiments::convergence_run(kAlpha, 10000);
  std::string qs;
  for (const auto& r : records) {
    ok = ok && r.passed();
    qs += (qs.empty() ? "" : ",") + r.params[2].second;
  }
  return {ok, "DP = brute force for 3..12; gaps within 2/(3q) for q in {" + qs + "}"};
}

Outcome roman_graphs() {
  const bool c3 = finite::is_roman_graph(finite::FiniteGraph::cycle(3));
  const bool c4 = finite::is_roman_graph(finite::FiniteGraph::cycle(4));
  return {c3 && !c4, std::string("C_3 ") + (c3 ? "roman" : "not roman") + ", C_4 " +
                         (c4 ? "roman" : "not roman")};
}

Outcome scheme_audit() {
  const SchemeParams p{kAlpha, mpq_class(1, 10), 30};
  const SchemeResult s = build_scheme(p);
  const SchemeAudit a = scheme_social_needy_audit(s, p);
  const QAlpha bound = QAlpha(2 * p.epsilon) + mpq_class(2) * a.uncovered_measure;
  bool ok = less_equal(a.social_measure, bound, kAlpha);

  // Pointwise classifier: the label of v comes from its hit time alone.
  auto label = [&](const CirclePoint& v) {
    const auto k = hit_time(v, p);
    return (!k || *k % 3 == 0) ? 2 : 0;
  };
  const CirclePoint step = pt(0, 1);
  const CirclePoint back = pt(0, -1);
  std::mt19937_64 rng(2024);
  std::size_t mismatches = 0;
  for (int i = 0; i < 10000; ++i) {
    const long n = experiments::uniform_int(rng, 0, 999999);
    const CirclePoint v = pt(mpq_class(n, 1000000));
    const int self = label(v);
    const int left = label(add(v, back, kAlpha));
    const int right = label(add(v, step, kAlpha));
    const bool social = self == 2 && (left == 2 || right == 2);
    const bool needy = self == 0 && left == 2 && right == 2;
    if (social != a.social.contains(v) || needy != a.needy.contains(v)) ++mismatches;
    if ((self == 2) != s.labeling.twos().contains(v)) ++mismatches;
  }
  ok = ok && mismatches == 0;
  return {ok, "social " + a.social_measure.decimal(kAlpha, 6) + " <= " +
                  bound.decimal(kAlpha, 6) + ", " + std::to_string(mismatches) +
                  " mismatches over 10000 samples"};
}

Outcome not_rotation_invariant() {
  bool ok = true;
  std::string d;
  for (long den : {10L, 100L}) {
    const SchemeResult s =
        build_scheme(SchemeParams::with_default_depth(kAlpha, mpq_class(1, den)));
    const QAlpha defect = invariance_defect(s.labeling.twos(), pt(0, 3));
    ok = ok && defect.sign(kAlpha) > 0;
    d += (d.empty() ? "" : "; ") + ("eps=1/" + std::to_string(den) + " defect ") +
         defect.decimal(kAlpha, 6);
  }
  return {ok, d};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double budget_s;
  };
  const std::array<Criterion, 9> criteria{{
      {1, "four-cycle labeling value", four_cycle, 1.0},
      {2, "scheme bound", scheme_bound, 0.0},
      {3, "lower bound and shrinking gap", lower_bound, 0.0},
      {4, "neighborhood measure bound", [] { return sweep(experiments::PropertyKind::parsprototo); },
       0.0},
      {5, "edge-measure identity", [] { return sweep(experiments::PropertyKind::edge_measure); },
       0.0},
      {6, "finite solver correctness", finite_solver, 30.0},
      {7, "roman graph check", roman_graphs, 0.0},
      {8, "scheme social/needy audit", scheme_audit, 0.0},
      {9, "non-invariance under 3 alpha", not_rotation_invariant, 0.0},
  }};

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      o.pass = false;
      o.detail += " [over the " + std::to_string(c.budget_s) + " s budget]";
    }
    std::printf("%s criterion %d (%s): %s [%.3f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
