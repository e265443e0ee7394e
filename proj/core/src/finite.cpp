#include "romdom/finite.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

#include "romdom/errors.hpp"

namespace romdom::finite {

FiniteGraph::FiniteGraph(std::size_t n) : adjacency_(n) {}

FiniteGraph FiniteGraph::path(std::size_t n) {
  FiniteGraph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

FiniteGraph FiniteGraph::cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("a simple cycle needs at least 3 vertices");
  FiniteGraph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

FiniteGraph FiniteGraph::complete(std::size_t n) {
  FiniteGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

void FiniteGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) {
    throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                          "} has a vertex outside [0," + std::to_string(size()) + ")");
  }
  if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) {
    throw InvalidArgument("repeated edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  ++edges_;
}

bool FiniteGraph::has_edge(std::size_t u, std::size_t v) const {
  const auto& nu = adjacency_.at(u);
  return std::find(nu.begin(), nu.end(), v) != nu.end();
}

std::size_t FiniteGraph::max_degree() const {
  std::size_t out = 0;
  for (const auto& nbrs : adjacency_) out = std::max(out, nbrs.size());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> FiniteGraph::components() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t root = 0; root < size(); ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> comp{root};
    seen[root] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t w : adjacency_[comp[i]]) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

FiniteGraph FiniteGraph::induced(const std::vector<std::size_t>& vertices) const {
  std::vector<std::size_t> index(size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < vertices.size(); ++i) index.at(vertices[i]) = i;
  FiniteGraph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t w : adjacency_[vertices[i]]) {
      const std::size_t j = index[w];
      if (j != std::numeric_limits<std::size_t>::max() && i < j) g.add_edge(i, j);
    }
  }
  return g;
}

unsigned FiniteRdf::value() const {
  return std::accumulate(labels.begin(), labels.end(), 0u,
                         [](unsigned acc, Label l) { return acc + l; });
}

bool FiniteRdf::uses_label_one() const {
  return std::find(labels.begin(), labels.end(), Label{1}) != labels.end();
}

bool is_rdf(const FiniteGraph& g, const FiniteRdf& f) {
  if (f.labels.size() != g.size()) return false;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (f.labels[v] > 2) return false;
    if (f.labels[v] != 0) continue;
    const auto& nbrs = g.neighbors(v);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](std::size_t w) { return f.labels[w] == 2; })) {
      return false;
    }
  }
  return true;
}

namespace {

// Labels vertices in index order. A vertex is checked as soon as it and all
// its neighbours are labelled, which prunes dead branches early.
class LabelSearch {
 public:
  explicit LabelSearch(const FiniteGraph& g) : g_(g), labels_(g.size(), 0), finalize_(g.size()) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      std::size_t last = v;
      for (std::size_t w : g.neighbors(v)) last = std::max(last, w);
      finalize_[last].push_back(v);
    }
  }

  // Minimum value, and a witness.
  RdnResult minimize() {
    best_ = static_cast<unsigned>(g_.size()) + 1;
    mode_ = Mode::minimize;
    search(0, 0);
    return RdnResult{best_, FiniteRdf{best_labels_}};
  }

  void enumerate(unsigned target, const std::function<bool(const FiniteRdf&)>& visit) {
    best_ = target;
    mode_ = Mode::enumerate;
    visit_ = &visit;
    stop_ = false;
    search(0, 0);
  }

 private:
  enum class Mode { minimize, enumerate };

  bool dominated(std::size_t v) const {
    if (labels_[v] != 0) return true;
    const auto& nbrs = g_.neighbors(v);
    return std::any_of(nbrs.begin(), nbrs.end(), [&](std::size_t w) { return labels_[w] == 2; });
  }

  void search(std::size_t i, unsigned sum) {
    if (stop_) return;
    if (i == g_.size()) {
      if (mode_ == Mode::minimize) {
        if (sum < best_) {
          best_ = sum;
          best_labels_ = labels_;
        }
      } else if (sum == best_) {
        stop_ = !(*visit_)(FiniteRdf{labels_});
      }
      return;
    }
    static constexpr std::array<Label, 3> kOrder{0, 2, 1};
    for (Label label : kOrder) {
      const unsigned next = sum + label;
      if (mode_ == Mode::minimize ? next >= best_ : next > best_) continue;
      labels_[i] = label;
      bool ok = true;
      for (std::size_t v : finalize_[i]) {
        if (!dominated(v)) {
          ok = false;
          break;
        }
      }
      if (ok) search(i + 1, next);
      if (stop_) break;
    }
    labels_[i] = 0;
  }

  const FiniteGraph& g_;
  std::vector<Label> labels_;
  std::vector<Label> best_labels_;
  std::vector<std::vector<std::size_t>> finalize_;
  unsigned best_ = 0;
  Mode mode_ = Mode::minimize;
  const std::function<bool(const FiniteRdf&)>* visit_ = nullptr;
  bool stop_ = false;
};

void check_cap(const FiniteGraph& g, std::size_t cap) {
  if (g.size() > cap) throw InstanceTooLarge(g.size(), cap);
}

constexpr unsigned kInf = std::numeric_limits<unsigned>::max() / 4;

// Per-vertex DP state: 0 = label 0 not yet dominated, 1 = label 0 dominated,
// 2 = label 1, 3 = label 2.
using Row = std::array<unsigned, 4>;

constexpr int state_after(int prev, Label label) {
  if (label == 1) return 2;
  if (label == 2) return 3;
  return prev == 3 ? 1 : 0;
}

// Extends row by one vertex. The previous vertex is final afterwards, so an
// undominated 0 there needs label 2 here.
Row step(const Row& row) {
  Row next{kInf, kInf, kInf, kInf};
  for (int prev = 0; prev < 4; ++prev) {
    if (row[prev] >= kInf) continue;
    for (Label label = 0; label <= 2; ++label) {
      if (prev == 0 && label != 2) continue;
      const int s = state_after(prev, label);
      next[s] = std::min(next[s], row[prev] + label);
    }
  }
  return next;
}

unsigned path_rdn(std::size_t n) {
  Row row{0, kInf, 1, 2};
  for (std::size_t v = 1; v < n; ++v) row = step(row);
  return std::min({row[1], row[2], row[3]});
}

unsigned cycle_rdn(std::size_t n) {
  unsigned best = kInf;
  for (Label first = 0; first <= 2; ++first) {
    // rows[d][s]: d = whether vertex 0 already has a label-2 neighbour.
    std::array<Row, 2> rows{};
    rows[0] = Row{kInf, kInf, kInf, kInf};
    rows[1] = Row{kInf, kInf, kInf, kInf};
    // Vertex 0's own domination is tracked by d, so seed it as settled.
    rows[0][first == 0 ? 1 : state_after(0, first)] = first;
    for (std::size_t v = 1; v < n; ++v) {
      std::array<Row, 2> next{};
      next[0] = Row{kInf, kInf, kInf, kInf};
      next[1] = Row{kInf, kInf, kInf, kInf};
      for (int d = 0; d < 2; ++d) {
        for (int prev = 0; prev < 4; ++prev) {
          if (rows[d][prev] >= kInf) continue;
          for (Label label = 0; label <= 2; ++label) {
            if (prev == 0 && label != 2) continue;
            const bool touches_first = v == 1 || v == n - 1;
            const int nd = (d == 1 || (touches_first && label == 2)) ? 1 : 0;
            int s = state_after(prev, label);
            // The last vertex also neighbours vertex 0.
            if (v == n - 1 && s == 0 && first == 2) s = 1;
            next[nd][s] = std::min(next[nd][s], rows[d][prev] + label);
          }
        }
      }
      rows = next;
    }
    for (int d = 0; d < 2; ++d) {
      if (first == 0 && d == 0) continue;
      for (int s = 1; s < 4; ++s) best = std::min(best, rows[d][s]);
    }
  }
  return best;
}

enum class ComponentKind { path, cycle, other };

ComponentKind classify(const FiniteGraph& g) {
  const std::size_t n = g.size();
  if (g.max_degree() > 2) return ComponentKind::other;
  if (g.edge_count() + 1 == n) return ComponentKind::path;
  if (g.edge_count() == n && n >= 3) return ComponentKind::cycle;
  return ComponentKind::other;
}

}  // namespace

RdnResult brute_force_rdn(const FiniteGraph& g, std::size_t cap) {
  check_cap(g, cap);
  return LabelSearch(g).minimize();
}

void for_each_optimal_rdf(const FiniteGraph& g,
                          const std::function<bool(const FiniteRdf&)>& visit,
                          std::size_t cap) {
  check_cap(g, cap);
  LabelSearch search(g);
  const unsigned optimum = search.minimize().value;
  search.enumerate(optimum, visit);
}

unsigned cycle_path_rdn(Shape shape, std::size_t n) {
  if (shape == Shape::path) {
    if (n < 1) throw InvalidArgument("a path needs at least 1 vertex");
    return path_rdn(n);
  }
  if (n < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  return cycle_rdn(n);
}

namespace {

unsigned dominate_exhaustive(const FiniteGraph& g, std::size_t cap) {
  check_cap(g, cap);
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> finalize(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t last = v;
    for (std::size_t w : g.neighbors(v)) last = std::max(last, w);
    finalize[last].push_back(v);
  }
  std::vector<bool> chosen(n, false);
  unsigned best = static_cast<unsigned>(n);

  auto covered = [&](std::size_t v) {
    if (chosen[v]) return true;
    const auto& nbrs = g.neighbors(v);
    return std::any_of(nbrs.begin(), nbrs.end(), [&](std::size_t w) { return chosen[w]; });
  };
  std::function<void(std::size_t, unsigned)> search = [&](std::size_t i, unsigned count) {
    if (count >= best) return;
    if (i == n) {
      best = count;
      return;
    }
    for (bool take : {true, false}) {
      chosen[i] = take;
      const bool ok = std::all_of(finalize[i].begin(), finalize[i].end(), covered);
      if (ok) search(i + 1, count + (take ? 1 : 0));
    }
    chosen[i] = false;
  };
  search(0, 0);
  return best;
}

// Vertices of a path or cycle component in walking order.
std::vector<std::size_t> walk_order(const FiniteGraph& g) {
  const std::size_t n = g.size();
  std::size_t start = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.neighbors(v).size() < 2) {
      start = v;
      break;
    }
  }
  std::vector<std::size_t> order{start};
  std::vector<bool> seen(n, false);
  seen[start] = true;
  while (order.size() < n) {
    const std::size_t v = order.back();
    for (std::size_t w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        order.push_back(w);
        break;
      }
    }
  }
  return order;
}

// Label 2 on every third vertex starting at the second; a leftover single
// vertex takes label 1 and a leftover pair puts 2 on its second vertex.
std::vector<Label> pattern_labels(std::size_t n) {
  std::vector<Label> labels(n, 0);
  const std::size_t full = n - n % 3;
  for (std::size_t v = 1; v < full; v += 3) labels[v] = 2;
  if (n % 3 == 1) labels[n - 1] = 1;
  if (n % 3 == 2) labels[n - 1] = 2;
  return labels;
}

}  // namespace

unsigned roman_domination_number(const FiniteGraph& g, std::size_t cap) {
  unsigned total = 0;
  for (const auto& comp : g.components()) {
    const FiniteGraph sub = g.induced(comp);
    switch (classify(sub)) {
      case ComponentKind::path:
        total += path_rdn(sub.size());
        break;
      case ComponentKind::cycle:
        total += cycle_rdn(sub.size());
        break;
      case ComponentKind::other:
        total += brute_force_rdn(sub, cap).value;
        break;
    }
  }
  return total;
}

RdnResult roman_domination(const FiniteGraph& g, std::size_t cap) {
  RdnResult out;
  out.witness.labels.assign(g.size(), 0);
  for (const auto& comp : g.components()) {
    const FiniteGraph sub = g.induced(comp);
    const ComponentKind kind = classify(sub);
    if (kind == ComponentKind::other) {
      const RdnResult part = brute_force_rdn(sub, cap);
      for (std::size_t i = 0; i < comp.size(); ++i) {
        out.witness.labels[comp[i]] = part.witness.labels[i];
      }
      out.value += part.value;
      continue;
    }
    const auto order = walk_order(sub);
    const auto labels = pattern_labels(sub.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      out.witness.labels[comp[order[i]]] = labels[i];
    }
    out.value += kind == ComponentKind::path ? path_rdn(sub.size()) : cycle_rdn(sub.size());
  }
  if (out.witness.value() != out.value || !is_rdf(g, out.witness)) {
    throw Error("witness does not match the dynamic program");
  }
  return out;
}

mpq_class nrdn(const FiniteGraph& g, std::size_t cap) {
  if (g.size() == 0) throw InvalidArgument("the empty graph has no normalised RDN");
  mpq_class out(roman_domination_number(g, cap), static_cast<unsigned long>(g.size()));
  out.canonicalize();
  return out;
}

namespace {

bool roman_by_enumeration(const FiniteGraph& g, std::size_t cap) {
  bool found = false;
  for_each_optimal_rdf(
      g,
      [&](const FiniteRdf& f) {
        found = !f.uses_label_one();
        return !found;
      },
      cap);
  return found;
}

}  // namespace

bool is_roman_graph(const FiniteGraph& g, std::size_t cap) {
  if (g.size() <= cap) return roman_by_enumeration(g, cap);
  // Optimal functions of a disjoint union are unions of optimal functions.
  for (const auto& comp : g.components()) {
    const FiniteGraph sub = g.induced(comp);
    if (sub.size() > cap && classify(sub) != ComponentKind::other) {
      // A 1-free optimum exists iff RDN = 2 * gamma.
      if (roman_domination_number(sub, cap) != 2 * domination_number(sub, cap)) return false;
    } else if (!roman_by_enumeration(sub, cap)) {
      return false;
    }
  }
  return true;
}

unsigned domination_number(const FiniteGraph& g, std::size_t cap) {
  if (g.size() <= cap) return dominate_exhaustive(g, cap);
  unsigned total = 0;
  for (const auto& comp : g.components()) {
    const FiniteGraph sub = g.induced(comp);
    if (sub.size() > cap && classify(sub) != ComponentKind::other) {
      total += static_cast<unsigned>((sub.size() + 2) / 3);
    } else {
      total += dominate_exhaustive(sub, cap);
    }
  }
  return total;
}

}  // namespace romdom::finite
