#include "vmc/graph.hpp"

#include <sstream>

#include "vmc/errors.hpp"

namespace vmc {

bool& runtime_checks() {
  static bool on = true;
  return on;
}

Graph::Graph(int capacity, bool all_active)
    : cap_(capacity), verts_(capacity), adj_(capacity, VertexSet(capacity)) {
  if (all_active)
    for (int v = 0; v < capacity; ++v) verts_.set(v);
}

long Graph::edge_count() const {
  long deg = 0;
  verts_.for_each([&](int v) { deg += adj_[v].count(); });
  return deg / 2;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw PreconditionError("self-loop");
  if (!has_vertex(u) || !has_vertex(v)) throw PreconditionError("edge endpoint not active");
  adj_[u].set(v);
  adj_[v].set(u);
}

void Graph::remove_vertex(int v) {
  if (!has_vertex(v)) return;
  adj_[v].for_each([&](int u) { adj_[u].reset(v); });
  adj_[v].clear();
  verts_.reset(v);
}

void Graph::remove_vertices(const VertexSet& z) {
  z.for_each([&](int v) { remove_vertex(v); });
}

Graph Graph::induced(const VertexSet& keep) const {
  Graph g = *this;
  VertexSet drop = verts_ - keep;
  g.remove_vertices(drop);
  return g;
}

Graph Graph::without_vertex(int v) const {
  Graph g = *this;
  g.remove_vertex(v);
  return g;
}

VertexSet Graph::reachable(const VertexSet& sources, const VertexSet& removed) const {
  VertexSet seen = (sources & verts_) - removed;
  VertexSet frontier = seen;
  while (frontier.any()) {
    VertexSet next(cap_);
    frontier.for_each([&](int v) { next |= adj_[v]; });
    next -= removed;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> Graph::components(const VertexSet& removed) const {
  std::vector<VertexSet> out;
  VertexSet todo = verts_ - removed;
  while (todo.any()) {
    int v = todo.first();
    VertexSet comp = reachable(VertexSet::single(cap_, v), removed);
    out.push_back(comp);
    todo -= comp;
  }
  return out;
}

Graph Graph::torso(const VertexSet& z) const {
  Graph g = *this;
  // Components of the induced subgraph on z; survivors adjacent to the same
  // component become a clique.
  VertexSet outside = verts_ - z;
  VertexSet todo = z & verts_;
  while (todo.any()) {
    int v = todo.first();
    VertexSet comp = reachable(VertexSet::single(cap_, v), outside);
    VertexSet nb(cap_);
    comp.for_each([&](int u) { nb |= adj_[u]; });
    nb -= z;
    nb.for_each([&](int u) {
      g.adj_[u] |= nb;
      g.adj_[u].reset(u);
    });
    todo -= comp;
  }
  g.remove_vertices(z & verts_);
  return g;
}

std::string Graph::encode() const {
  std::ostringstream os;
  os << cap_ << ';';
  verts_.for_each([&](int v) { os << v << ','; });
  os << ';';
  verts_.for_each([&](int v) {
    adj_[v].for_each([&](int u) {
      if (u > v) os << v << '-' << u << ',';
    });
  });
  return os.str();
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed) {
  return g.components(removed);
}

}  // namespace vmc
