#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace romdom::finite {

inline constexpr std::size_t kDefaultBruteForceCap = 16;

// Simple undirected graph on vertices 0..n-1.
class FiniteGraph {
 public:
  explicit FiniteGraph(std::size_t n = 0);

  static FiniteGraph path(std::size_t n);
  static FiniteGraph cycle(std::size_t n);
  static FiniteGraph complete(std::size_t n);

  // Throws InvalidArgument on loops, out-of-range ids or repeated edges.
  void add_edge(std::size_t u, std::size_t v);

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  bool has_edge(std::size_t u, std::size_t v) const;
  std::size_t max_degree() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  // Vertex sets of the connected components, each sorted.
  std::vector<std::vector<std::size_t>> components() const;
  FiniteGraph induced(const std::vector<std::size_t>& vertices) const;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t edges_ = 0;
};

using Label = std::uint8_t;

struct FiniteRdf {
  std::vector<Label> labels;

  unsigned value() const;
  bool uses_label_one() const;
};

// Every vertex labelled 0 has a neighbour labelled 2.
bool is_rdf(const FiniteGraph& g, const FiniteRdf& f);

struct RdnResult {
  unsigned value = 0;
  FiniteRdf witness;
};

// Exhaustive branch and bound. Throws InstanceTooLarge above the cap.
RdnResult brute_force_rdn(const FiniteGraph& g, std::size_t cap = kDefaultBruteForceCap);

// Visits every Roman dominating function of minimum value; the visitor
// returns false to stop early.
void for_each_optimal_rdf(const FiniteGraph& g,
                          const std::function<bool(const FiniteRdf&)>& visit,
                          std::size_t cap = kDefaultBruteForceCap);

enum class Shape { path, cycle };

// Transfer-matrix dynamic program; n >= 1 for paths and n >= 3 for cycles.
unsigned cycle_path_rdn(Shape shape, std::size_t n);

// Path and cycle components go through the dynamic program, any other
// component through brute force (subject to the cap, per component).
unsigned roman_domination_number(const FiniteGraph& g,
                                 std::size_t cap = kDefaultBruteForceCap);

// Same decomposition with a witness. Path and cycle components get an
// explicit pattern whose value is checked against the dynamic program.
RdnResult roman_domination(const FiniteGraph& g, std::size_t cap = kDefaultBruteForceCap);

// RDN / n.
mpq_class nrdn(const FiniteGraph& g, std::size_t cap = kDefaultBruteForceCap);

// True iff some minimum-value Roman dominating function avoids label 1.
// Graphs within the cap are decided by enumerating optimal functions; above
// it, path and cycle components use RDN = 2 * gamma.
bool is_roman_graph(const FiniteGraph& g, std::size_t cap = kDefaultBruteForceCap);

// Exhaustive within the cap; larger path and cycle components use
// ceil(n / 3).
unsigned domination_number(const FiniteGraph& g, std::size_t cap = kDefaultBruteForceCap);

}  // namespace romdom::finite
