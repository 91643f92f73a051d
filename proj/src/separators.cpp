#include "vmc/separators.hpp"

#include <algorithm>
#include <deque>

#include "vmc/errors.hpp"

namespace vmc {

namespace {
constexpr int kInf = 1 << 28;

void check_terminal_sets(const Graph& g, const VertexSet& s_set, const VertexSet& t_set) {
  if (s_set.intersects(t_set)) throw PreconditionError("source and sink sets overlap");
  if (!s_set.is_subset_of(g.vertices()) || !t_set.is_subset_of(g.vertices()))
    throw PreconditionError("terminal set contains a non-vertex");
}

bool sets_adjacent(const Graph& g, const VertexSet& s_set, const VertexSet& t_set) {
  bool adj = false;
  s_set.for_each([&](int s) {
    if (!adj && g.neighbors(s).intersects(t_set)) adj = true;
  });
  return adj;
}
}  // namespace

FlowState::FlowState(const Graph& g, const VertexSet& s_set, const VertexSet& t_set)
    : cap_nodes(2 * g.capacity()), adj(2 * g.capacity()) {
  VertexSet terminals = s_set | t_set;
  g.vertices().for_each([&](int v) {
    add_arc(node_in(v), node_out(v), terminals.test(v) ? kInf : 1);
  });
  g.vertices().for_each([&](int v) {
    g.neighbors(v).for_each([&](int u) {
      add_arc(node_out(v), node_in(u), kInf);
    });
  });
}

void FlowState::add_arc(int from, int to, int cap) {
  adj[from].push_back(int(arcs.size()));
  arcs.push_back({to, cap, 0});
  adj[to].push_back(int(arcs.size()));
  arcs.push_back({from, 0, 0});
}

int FlowState::max_flow(const VertexSet& s_set, const VertexSet& t_set, int limit) {
  int flow = 0;
  std::vector<int> parent_arc(cap_nodes);
  std::vector<char> is_sink(cap_nodes, 0);
  t_set.for_each([&](int t) { is_sink[node_in(t)] = 1; });
  while (flow <= limit) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    std::deque<int> q;
    s_set.for_each([&](int s) {
      parent_arc[node_out(s)] = -2;
      q.push_back(node_out(s));
    });
    int hit = -1;
    while (!q.empty() && hit < 0) {
      int x = q.front();
      q.pop_front();
      for (int a : adj[x]) {
        const Arc& arc = arcs[a];
        if (arc.cap - arc.flow <= 0 || parent_arc[arc.to] != -1) continue;
        parent_arc[arc.to] = a;
        if (is_sink[arc.to]) {
          hit = arc.to;
          break;
        }
        q.push_back(arc.to);
      }
    }
    if (hit < 0) return flow;
    // Every augmenting path crosses a unit internal arc (source-sink
    // adjacency is rejected before flow starts), so the bottleneck is 1.
    for (int x = hit; parent_arc[x] != -2;) {
      int a = parent_arc[x];
      arcs[a].flow += 1;
      arcs[a ^ 1].flow -= 1;
      x = arcs[a ^ 1].to;
    }
    ++flow;
  }
  return flow;  // flow == limit + 1: caller interprets as "exceeds limit"
}

std::vector<char> FlowState::residual_reaches_sink(const VertexSet& t_set) const {
  // Reverse reachability over residual arcs.
  std::vector<std::vector<int>> rev(cap_nodes);
  for (size_t a = 0; a < arcs.size(); ++a) {
    if (arcs[a].cap - arcs[a].flow > 0) {
      int from = arcs[a ^ 1].to;
      rev[arcs[a].to].push_back(from);
    }
  }
  std::vector<char> seen(cap_nodes, 0);
  std::deque<int> q;
  t_set.for_each([&](int t) {
    seen[node_in(t)] = 1;
    q.push_back(node_in(t));
  });
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : rev[x])
      if (!seen[y]) {
        seen[y] = 1;
        q.push_back(y);
      }
  }
  return seen;
}

std::optional<Separator> farthest_min_separator(const Graph& g, const VertexSet& s_set,
                                                const VertexSet& t_set) {
  check_terminal_sets(g, s_set, t_set);
  if (sets_adjacent(g, s_set, t_set)) return std::nullopt;

  FlowState fs(g, s_set, t_set);
  int flow = fs.max_flow(s_set, t_set, g.capacity() + 1);
  std::vector<char> to_sink = fs.residual_reaches_sink(t_set);

  VertexSet cut(g.capacity());
  VertexSet terminals = s_set | t_set;
  g.vertices().for_each([&](int v) {
    if (terminals.test(v)) return;
    if (!to_sink[FlowState::node_in(v)] && to_sink[FlowState::node_out(v)]) cut.set(v);
  });
  VertexSet reach = g.reachable(s_set, cut);

  if (runtime_checks()) {
    check_internal(cut.count() == flow, "min cut size disagrees with max flow");
    check_internal(!reach.intersects(t_set), "extracted cut does not separate");
    VertexSet nb(g.capacity());
    reach.for_each([&](int v) { nb |= g.neighbors(v); });
    nb -= reach;
    check_internal(nb == cut, "cut is not the neighborhood of its reachable side");
  }
  return Separator{cut, reach};
}

std::optional<std::pair<int, Separator>> min_vertex_separator(const Graph& g,
                                                              const VertexSet& s_set,
                                                              const VertexSet& t_set) {
  auto sep = farthest_min_separator(g, s_set, t_set);
  if (!sep) return std::nullopt;
  int size = sep->cut.count();
  return std::make_pair(size, std::move(*sep));
}

Separator farthest_isolating_min_cut(const Graph& g, const VertexSet& w_set, int w) {
  if (!w_set.test(w)) throw PreconditionError("w is not in W");
  VertexSet s = VertexSet::single(g.capacity(), w);
  VertexSet rest = w_set - s;
  auto sep = farthest_min_separator(g, s, rest);
  if (!sep)
    throw PreconditionError("terminal adjacent to the rest of W: no isolating cut exists");
  return *sep;
}

namespace {

// Candidate generation: branch on the lowest vertex of the farthest minimum
// separator, either deleting it (budget shrinks) or folding it into the
// source side. Returns candidate cuts of the current graph; importance is
// verified afterwards in the original graph.
void enum_candidates(const Graph& cur, const VertexSet& srcs, const VertexSet& t_set,
                     int budget, std::vector<VertexSet>& out) {
  if (budget < 0) return;
  auto sep = farthest_min_separator(cur, srcs, t_set);
  if (!sep) return;
  int size = sep->cut.count();
  if (size > budget) return;
  if (size == 0) {
    out.push_back(VertexSet(cur.capacity()));
    return;
  }
  int v = sep->cut.first();

  std::vector<VertexSet> sub;
  enum_candidates(cur.without_vertex(v), srcs, t_set, budget - 1, sub);
  for (VertexSet& x : sub) {
    x.set(v);
    out.push_back(std::move(x));
  }

  VertexSet grown = srcs | sep->reachable;
  grown.set(v);
  enum_candidates(cur, grown, t_set, budget, out);
}

bool is_important(const Graph& g, const VertexSet& s_set, const VertexSet& t_set,
                  const VertexSet& cut, VertexSet& reach_out) {
  reach_out = g.reachable(s_set, cut);
  if (reach_out.intersects(t_set)) return false;
  auto far = farthest_min_separator(g, reach_out, t_set);
  return far && far->cut == cut;
}

}  // namespace

std::vector<Separator> enumerate_important_separators(const Graph& g, const VertexSet& s_set,
                                                      const VertexSet& t_set, int k) {
  check_terminal_sets(g, s_set, t_set);
  if (k < 0) throw PreconditionError("k must be non-negative");

  std::vector<VertexSet> cands;
  enum_candidates(g, s_set, t_set, k, cands);

  std::vector<Separator> result;
  std::vector<VertexSet> kept;
  for (const VertexSet& cut : cands) {
    bool dup = false;
    for (const VertexSet& c : kept)
      if (c == cut) {
        dup = true;
        break;
      }
    if (dup) continue;
    kept.push_back(cut);
    VertexSet reach(g.capacity());
    if (is_important(g, s_set, t_set, cut, reach))
      result.push_back(Separator{cut, reach});
  }

  std::sort(result.begin(), result.end(), [](const Separator& a, const Separator& b) {
    int ca = a.cut.count(), cb = b.cut.count();
    if (ca != cb) return ca < cb;
    return a.cut < b.cut;
  });
  if (runtime_checks()) {
    double bound = 1;
    for (int i = 0; i < k; ++i) bound *= 4;
    check_internal(double(result.size()) <= bound, "important separator count exceeds 4^k");
  }
  return result;
}

VertexSet hitting_set_for_important_separators(const Graph& g, const VertexSet& s_set,
                                               const VertexSet& t_set, int k,
                                               const VertexSet& y) {
  check_terminal_sets(g, s_set, t_set);
  VertexSet h(g.capacity());
  VertexSet srcs = s_set;
  while (true) {
    auto sep = farthest_min_separator(g, srcs, t_set);
    if (!sep) break;  // min cut is infinite, family below k+1 exhausted
    if (sep->cut.count() > k) break;
    VertexSet pickable = sep->cut - y;
    int v = pickable.first();
    if (v < 0)
      throw PreconditionError(
          "hitting-set precondition violated: an important separator lies inside Y");
    h.set(v);
    srcs = srcs | sep->reachable;
    srcs.set(v);
  }
  return h;
}

}  // namespace vmc
