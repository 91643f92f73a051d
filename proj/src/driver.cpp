#include "vmc/driver.hpp"

#include <algorithm>

#include "vmc/errors.hpp"
#include "vmc/separators.hpp"

namespace vmc {

Witness propagate_witness(const Witness& leaf_witness, const std::vector<Edit>& edits) {
  Witness w = leaf_witness;
  for (auto it = edits.rbegin(); it != edits.rend(); ++it)
    if (it->kind == EditKind::DeleteVertex) w.vertices.set(it->v);
  return w;
}

SolverResult solve_compression(const CompressionInstance& inst, SolveStats* stats,
                               const SolveOptions& opts) {
  if (inst.infeasible || inst.k < 0) return {};
  VertexSet empty(inst.graph.capacity());
  if (is_compression_solution(inst, empty)) return {true, Witness{empty}};
  if (inst.k == 0) return {};  // the empty set was the only candidate

  // Any solution contains an isolating separator for every terminal, so a
  // terminal whose minimum isolating cut exceeds k settles the instance.
  {
    bool impossible = false;
    (inst.w_set & inst.graph.vertices()).for_each([&](int w) {
      if (impossible) return;
      VertexSet s = VertexSet::single(inst.graph.capacity(), w);
      VertexSet rest = (inst.w_set & inst.graph.vertices()) - s;
      if (!rest.any()) return;
      FlowState fs(inst.graph, s, rest);
      bool adjacent = inst.graph.neighbors(w).intersects(rest);
      if (adjacent || fs.max_flow(s, rest, inst.k) > inst.k) impossible = true;
    });
    if (impossible) return {};
  }

  PipelineContext ctx;
  ctx.stats = stats;

  std::vector<CompressionInstance> covered = shadow_removal_step(inst, opts.mode, opts.seed);
  for (const CompressionInstance& mid : covered) {
    for (BranchOutput& leaf : make_bipedal(mid, &ctx)) {
      SolverResult r = solve_bipedal_branching(leaf.inst);
      if (!r.yes) continue;
      Witness w = propagate_witness(*r.witness, leaf.edits);
      check_internal(is_compression_solution(inst, w.vertices),
                     "propagated witness fails verification");
      return {true, std::move(w)};
    }
  }
  return {};
}

namespace {

// Restricted-growth strings: every partition of elems into unordered
// nonempty blocks, blocks ordered by first occurrence (= by minimum, since
// elems is sorted ascending).
void rgs_partitions(const std::vector<int>& elems,
                    std::vector<std::vector<std::vector<int>>>& out) {
  int n = int(elems.size());
  if (n == 0) {
    out.push_back({});
    return;
  }
  std::vector<int> label(n, 0);
  std::function<void(int, int)> rec = [&](int i, int maxl) {
    if (i == n) {
      std::vector<std::vector<int>> blocks(maxl + 1);
      for (int j = 0; j < n; ++j) blocks[label[j]].push_back(elems[j]);
      out.push_back(std::move(blocks));
      return;
    }
    for (int l = 0; l <= maxl + 1; ++l) {
      label[i] = l;
      rec(i + 1, std::max(maxl, l));
    }
  };
  label[0] = 0;
  rec(1, 0);
}

}  // namespace

std::vector<CompressionPartition> enumerate_partitions(const std::vector<int>& elems) {
  std::vector<int> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  std::vector<CompressionPartition> out;
  int n = int(sorted.size());
  for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
    CompressionPartition part;
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
      (mask >> i & 1 ? part.w1 : rest).push_back(sorted[i]);
    std::vector<std::vector<std::vector<int>>> blockings;
    rgs_partitions(rest, blockings);
    for (auto& blocks : blockings) {
      CompressionPartition p = part;
      p.blocks = std::move(blocks);
      out.push_back(std::move(p));
    }
  }
  return out;
}

namespace {

struct BuiltInstance {
  CompressionInstance inst;
  bool feasible = true;
};

// Builds the compression instance of one partition on the prefix graph:
// delete W1, contract every other block onto its minimum element.
BuiltInstance build_partition_instance(const Graph& prefix_graph,
                                       const std::vector<VertexPair>& prefix_pairs, int k,
                                       const CompressionPartition& part) {
  BuiltInstance out;
  int cap = prefix_graph.capacity();
  int budget = k - int(part.w1.size());
  if (budget < 0) {
    out.feasible = false;
    return out;
  }

  std::vector<int> to(cap, -1);
  VertexSet w1set(cap), wset(cap), removed(cap);
  for (int v : part.w1) {
    w1set.set(v);
    removed.set(v);
  }
  for (const auto& block : part.blocks) {
    int rep = block.front();
    wset.set(rep);
    for (int v : block) {
      to[v] = rep;
      if (v != rep) removed.set(v);
    }
  }

  Graph g = prefix_graph;
  for (const auto& block : part.blocks) {
    int rep = block.front();
    for (int v : block) {
      if (v == rep) continue;
      prefix_graph.neighbors(v).for_each([&](int u) {
        int fu = to[u] >= 0 ? to[u] : u;
        if (fu != rep && !w1set.test(fu)) g.add_edge(rep, fu);
      });
    }
  }
  g.remove_vertices(removed);

  std::vector<VertexPair> pairs;
  for (const auto& [s, t] : prefix_pairs) {
    if (w1set.test(s) || w1set.test(t)) continue;
    int a = to[s] >= 0 ? to[s] : s;
    int b = to[t] >= 0 ? to[t] : t;
    if (a == b) {
      // Both endpoints were guessed into one surviving block: uncuttable.
      out.feasible = false;
      return out;
    }
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }

  out.inst.graph = std::move(g);
  out.inst.pairs = normalize_pairs(std::move(pairs));
  out.inst.w_set = wset;
  out.inst.k = budget;
  if (runtime_checks())
    check_internal(is_multicut(out.inst.graph, out.inst.pairs, out.inst.w_set),
                   "partition instance: W is not a multicut");
  return out;
}

}  // namespace

SolverResult solve_vmc(const MulticutInstance& inst, SolveStats* stats,
                       const std::vector<int>* insertion_order, const SolveOptions& opts) {
  const Graph& g = inst.graph;
  int cap = g.capacity();
  std::vector<int> order;
  if (insertion_order) {
    order = *insertion_order;
  } else {
    order = g.vertices().to_vector();
  }

  VertexSet prefix(cap);
  VertexSet x(cap);  // solution of the current prefix instance
  for (int vi : order) {
    prefix.set(vi);
    Graph gi = g.induced(prefix);
    std::vector<VertexPair> ti;
    for (const auto& [s, t] : inst.pairs)
      if (prefix.test(s) && prefix.test(t)) ti.emplace_back(s, t);

    if (is_multicut(gi, ti, x)) continue;  // previous solution still works

    VertexSet s_set = x;
    s_set.set(vi);
    std::vector<int> s_elems = s_set.to_vector();

    bool solved = false;
    for (const CompressionPartition& part : enumerate_partitions(s_elems)) {
      BuiltInstance built = build_partition_instance(gi, ti, inst.k, part);
      if (!built.feasible) continue;
      SolverResult r = solve_compression(built.inst, stats, opts);
      if (!r.yes) continue;
      VertexSet xi = r.witness->vertices;
      for (int v : part.w1) xi.set(v);
      check_internal(xi.count() <= inst.k && is_multicut(gi, ti, xi),
                     "compression step returned an invalid prefix solution");
      x = xi;
      solved = true;
      break;
    }
    if (!solved) return {};
  }
  check_internal(is_multicut(g, inst.pairs, x) && x.count() <= inst.k,
                 "final witness fails verification");
  return {true, Witness{x}};
}

}  // namespace vmc
