#include "vmc/bipedal_solver.hpp"

#include <algorithm>

#include "vmc/errors.hpp"

namespace vmc {

namespace {

// Size-then-colexicographic subset enumeration over index positions
// 0..n-1. Stops early when `accept` returns true.
template <class F>
bool enumerate_subsets(int n, int max_size, F accept) {
  for (int size = 0; size <= std::min(max_size, n); ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      if (accept(pick)) return true;
      int i = 0;
      while (i < size) {
        int bound = (i + 1 < size) ? pick[i + 1] : n;
        if (pick[i] + 1 < bound) break;
        ++i;
      }
      if (i == size) break;
      ++pick[i];
      for (int j = 0; j < i; ++j) pick[j] = j;
    }
  }
  return false;
}

// Any violated path in G - x: a W-W connection or an uncut terminal pair.
// Returns the path's vertex sequence, empty when x is a solution.
std::vector<int> violated_path(const CompressionInstance& inst, const VertexSet& x) {
  const Graph& g = inst.graph;
  int cap = g.capacity();

  auto bfs_path = [&](int s, int t) -> std::vector<int> {
    std::vector<int> parent(cap, -2);
    std::vector<int> queue;
    parent[s] = -1;
    queue.push_back(s);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      if (u == t) break;
      bool done = false;
      g.neighbors(u).for_each([&](int v) {
        if (done || x.test(v) || parent[v] != -2) return;
        parent[v] = u;
        if (v == t) done = true;
        queue.push_back(v);
      });
      if (done) break;
    }
    if (parent[t] == -2) return {};
    std::vector<int> path;
    for (int u = t; u != -1; u = parent[u]) path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
  };

  // W-W connections.
  std::vector<int> ws = (inst.w_set & g.vertices()).to_vector();
  for (size_t i = 0; i < ws.size(); ++i)
    for (size_t j = i + 1; j < ws.size(); ++j) {
      auto p = bfs_path(ws[i], ws[j]);
      if (!p.empty()) return p;
    }
  // Terminal pairs (an endpoint inside x counts as cut).
  for (const auto& [s, t] : inst.pairs) {
    if (x.test(s) || x.test(t)) continue;
    auto p = bfs_path(s, t);
    if (!p.empty()) return p;
  }
  return {};
}

bool branch_search(const CompressionInstance& inst, VertexSet& x, int budget,
                   VertexSet& found) {
  std::vector<int> path = violated_path(inst, x);
  if (path.empty()) {
    found = x;
    return true;
  }
  if (budget == 0) return false;
  for (int v : path) {
    if (inst.w_set.test(v)) continue;
    x.set(v);
    if (branch_search(inst, x, budget - 1, found)) {
      x.reset(v);
      return true;
    }
    x.reset(v);
  }
  return false;
}

}  // namespace

SolverResult solve_bipedal_exact(const CompressionInstance& inst) {
  if (inst.infeasible || inst.k < 0) return {};
  std::vector<int> ids = (inst.graph.vertices() - inst.w_set).to_vector();
  SolverResult res;
  enumerate_subsets(int(ids.size()), inst.k, [&](const std::vector<int>& pick) {
    VertexSet x(inst.graph.capacity());
    for (int i : pick) x.set(ids[i]);
    if (!is_compression_solution(inst, x)) return false;
    res.yes = true;
    res.witness = Witness{x};
    return true;
  });
  return res;
}

SolverResult solve_bipedal_branching(const CompressionInstance& inst) {
  if (inst.infeasible || inst.k < 0) return {};
  VertexSet x(inst.graph.capacity());
  VertexSet found(inst.graph.capacity());
  if (!branch_search(inst, x, inst.k, found)) return {};
  SolverResult res;
  res.yes = true;
  res.witness = Witness{found};
  if (runtime_checks())
    check_internal(is_compression_solution(inst, found), "branching solver witness invalid");
  return res;
}

}  // namespace vmc
