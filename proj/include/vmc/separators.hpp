#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "vmc/graph.hpp"

namespace vmc {

// Minimal separator N(C) stored together with its source-side reachable set C.
struct Separator {
  VertexSet cut;        // N(C); disjoint from sources and sinks
  VertexSet reachable;  // C; contains every source
};

// Split-graph max flow for vertex-capacitated cuts: every vertex v becomes an
// arc in(v) -> out(v) with capacity 1 (unbounded on terminals), every edge
// (u,v) becomes unbounded arcs out(u) -> in(v) and out(v) -> in(u). Flow is
// integral and augmented one unit at a time.
struct FlowState {
  struct Arc {
    int to;
    int cap;
    int flow;
  };
  int cap_nodes = 0;
  std::vector<Arc> arcs;               // arc i and i^1 are reverses
  std::vector<std::vector<int>> adj;   // arc ids leaving each node

  static int node_in(int v) { return 2 * v; }
  static int node_out(int v) { return 2 * v + 1; }

  FlowState(const Graph& g, const VertexSet& s_set, const VertexSet& t_set);
  void add_arc(int from, int to, int cap);
  // Runs augmentation until exhaustion or the flow exceeds `limit`;
  // returns the flow value (limit+1 means "more than limit").
  int max_flow(const VertexSet& s_set, const VertexSet& t_set, int limit);
  // Split nodes from which a sink is reachable in the residual network.
  std::vector<char> residual_reaches_sink(const VertexSet& t_set) const;
};

// Farthest minimum S-T vertex separator, or absent when no separator exists
// (some source equals or is adjacent to some sink). Throws when S and T
// overlap or contain non-vertices.
std::optional<Separator> farthest_min_separator(const Graph& g, const VertexSet& s_set,
                                                const VertexSet& t_set);

// Minimum separator size together with a witness (the farthest one).
std::optional<std::pair<int, Separator>> min_vertex_separator(const Graph& g,
                                                              const VertexSet& s_set,
                                                              const VertexSet& t_set);

// FC(w): reachable side of the farthest minimum cut isolating w from the rest
// of W. Throws when w is not in W or no isolating cut exists (w adjacent to
// another terminal).
Separator farthest_isolating_min_cut(const Graph& g, const VertexSet& w_set, int w);

// Exactly the important S-T separators of size at most k, sorted by size then
// lexicographically. At most 4^k of them.
std::vector<Separator> enumerate_important_separators(const Graph& g, const VertexSet& s_set,
                                                      const VertexSet& t_set, int k);

// A set H, |H| <= k, disjoint from y, meeting every important S-T separator
// of size <= k. Requires that no such separator is fully contained in y;
// a violation surfaces as PreconditionError.
VertexSet hitting_set_for_important_separators(const Graph& g, const VertexSet& s_set,
                                               const VertexSet& t_set, int k,
                                               const VertexSet& y);

}  // namespace vmc
