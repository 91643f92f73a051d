#pragma once
#include <string>
#include <vector>

#include "vmc/vertex_set.hpp"

namespace vmc {

// Simple undirected graph over a fixed id space [0, capacity). Instance
// transformations (torso, contract, vertex deletion) shrink the set of
// active vertices but never renumber, so witnesses map back by identity.
// Graphs are immutable once built; transformations return new values.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int capacity, bool all_active = true);

  int capacity() const { return cap_; }
  const VertexSet& vertices() const { return verts_; }
  int vertex_count() const { return verts_.count(); }
  long edge_count() const;

  bool has_vertex(int v) const { return v >= 0 && v < cap_ && verts_.test(v); }
  bool has_edge(int u, int v) const { return has_vertex(u) && adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }

  void add_edge(int u, int v);
  void remove_vertex(int v);
  void remove_vertices(const VertexSet& z);

  Graph induced(const VertexSet& keep) const;
  Graph without_vertex(int v) const;

  // Vertices reachable from `sources` in the graph minus `removed`;
  // sources inside `removed` contribute nothing.
  VertexSet reachable(const VertexSet& sources, const VertexSet& removed) const;

  // Connected components of the graph minus `removed`, ordered by their
  // smallest vertex id.
  std::vector<VertexSet> components(const VertexSet& removed) const;

  // Torso: removes z and joins any two survivors connected by a path whose
  // internal vertices all lie in z.
  Graph torso(const VertexSet& z) const;

  bool operator==(const Graph& o) const {
    return cap_ == o.cap_ && verts_ == o.verts_ && adj_ == o.adj_;
  }

  // Canonical byte encoding, used for hashing and deduplication.
  std::string encode() const;

 private:
  int cap_ = 0;
  VertexSet verts_;
  std::vector<VertexSet> adj_;
};

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed);

}  // namespace vmc
