#pragma once
#include <string>
#include <utility>
#include <vector>

#include "vmc/graph.hpp"

namespace vmc {

// Terminal pair, stored normalized (first < second).
using VertexPair = std::pair<int, int>;

struct MulticutInstance {
  Graph graph;
  std::vector<VertexPair> pairs;  // sorted, unique
  int k = 0;
};

// Compression instance (G, T, W, k): W is a known multicut of (G, T) of size
// at most k+1; sought is a solution disjoint from W that is additionally a
// multiway cut for W. Internal pipeline steps may construct instances that
// bend the |W| <= k+1 bound (k shrinks along delete branches) or carry
// k = -1 (the canonical trivial no-instance); the checked factory enforces
// the full contract at the API boundary.
struct CompressionInstance {
  Graph graph;
  std::vector<VertexPair> pairs;  // sorted, unique
  VertexSet w_set;
  int k = 0;
  // Set when a transformation produced an uncuttable pair (both endpoints
  // collapsed onto one W vertex). Such a branch must report no.
  bool infeasible = false;

  std::string encode() const;
  bool operator==(const CompressionInstance& o) const {
    return k == o.k && infeasible == o.infeasible && w_set == o.w_set &&
           pairs == o.pairs && graph == o.graph;
  }
};

struct Witness {
  VertexSet vertices;
};

std::vector<VertexPair> normalize_pairs(std::vector<VertexPair> pairs);

// Validating constructor used by file loading and the iterative-compression
// driver. Throws PreconditionError on (s,s) pairs, invalid ids, W not a
// multicut, |W| > k+1, or k < 0.
CompressionInstance make_compression_instance(Graph g, std::vector<VertexPair> pairs,
                                              VertexSet w_set, int k);

bool is_multicut(const Graph& g, const std::vector<VertexPair>& pairs, const VertexSet& x);
bool is_multiway_cut(const Graph& g, const VertexSet& w_set, const VertexSet& x);
bool is_compression_solution(const CompressionInstance& inst, const VertexSet& x);

// torso(I, Z): removes Z, joins survivors connected by Z-paths, and maps each
// terminal-pair endpoint in Z to every survivor reachable from it by a
// Z-path. Pairs whose image is empty are dropped (the endpoint's whole
// component lies in Z, so the pair is disconnected for good); pairs that
// collapse onto a single vertex mark the result infeasible.
CompressionInstance torso(const CompressionInstance& inst, const VertexSet& z);

// contract(I, f): merges each vertex of the domain into its image in W.
// Pairs collapsing onto one vertex mark the result infeasible.
CompressionInstance contract(const CompressionInstance& inst,
                             const std::vector<std::pair<int, int>>& mapping);

// The canonical trivial bipedal no-instance: empty graph, k = -1.
CompressionInstance trivial_no_instance(int capacity);

}  // namespace vmc
