#include "vmc/branching.hpp"

#include <algorithm>

#include "vmc/errors.hpp"
#include "vmc/separators.hpp"

namespace vmc {

std::string Edit::describe() const {
  switch (kind) {
    case EditKind::DeleteVertex:
      return "delete " + std::to_string(v + 1);
    case EditKind::Torso:
      return "torso " + std::to_string(v + 1);
    case EditKind::Contract:
      return "contract " + std::to_string(v + 1) + "->" + std::to_string(w + 1);
    case EditKind::BipedalContract:
      return "bipedal-contract";
  }
  return "?";
}

std::string measure_to_string(const LpValue& lp, int k) {
  if (lp.infinite) return "-inf";
  return rational_to_string(Rational(2 * k) - lp.value);
}

Regions regions(const Graph& g, const VertexSet& w_set) {
  Regions r;
  r.w_ids = (w_set & g.vertices()).to_vector();
  r.fc.reserve(r.w_ids.size());
  for (int w : r.w_ids) r.fc.push_back(farthest_isolating_min_cut(g, w_set, w).reachable);
  r.parts.assign(size_t(1) << r.w_ids.size(), VertexSet(g.capacity()));
  g.vertices().for_each([&](int v) {
    uint32_t mask = 0;
    for (size_t i = 0; i < r.fc.size(); ++i)
      if (r.fc[i].test(v)) mask |= uint32_t(1) << i;
    r.parts[mask].set(v);
  });
  return r;
}

namespace {

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet nb(g.capacity());
  s.for_each([&](int v) { nb |= g.neighbors(v); });
  nb -= s;
  return nb;
}

// Inner boundary B(S) = N(V \ S): the vertices of S with a neighbor outside.
VertexSet inner_boundary(const Graph& g, const VertexSet& s) {
  VertexSet b(g.capacity());
  s.for_each([&](int v) {
    if (!g.neighbors(v).is_subset_of(s)) b.set(v);
  });
  return b;
}

// FC boundaries N(FC(w)) \ W in Rule 2's iteration order (w ascending).
std::vector<std::pair<int, VertexSet>> fc_boundaries(const Graph& g, const VertexSet& w_set) {
  std::vector<std::pair<int, VertexSet>> out;
  (w_set & g.vertices()).for_each([&](int w) {
    Separator fc = farthest_isolating_min_cut(g, w_set, w);
    out.emplace_back(w, neighborhood(g, fc.reachable) - w_set);
  });
  return out;
}

// Region structure checks, run at Rule 2 nodes with P(empty) empty: FC
// boundaries are pairwise disjoint, and edges only join regions R1, R2
// with |R1| = |R2| = 1 or {R1} inside a size-2 R2 (or vice versa).
void verify_region_structure(const Graph& g, const Regions& r) {
  size_t nw = r.w_ids.size();
  for (size_t i = 0; i < nw; ++i)
    for (size_t j = i + 1; j < nw; ++j) {
      VertexSet ni = neighborhood(g, r.fc[i]);
      VertexSet nj = neighborhood(g, r.fc[j]);
      check_internal(!ni.intersects(nj), "FC boundaries are not pairwise disjoint");
    }
  auto popcount = [](uint32_t m) { return __builtin_popcount(m); };
  for (uint32_t m1 = 0; m1 < r.parts.size(); ++m1) {
    if (!r.parts[m1].any()) continue;
    VertexSet nb = neighborhood(g, r.parts[m1]);
    for (uint32_t m2 = 0; m2 < r.parts.size(); ++m2) {
      if (m1 == m2 || !r.parts[m2].any() || !nb.intersects(r.parts[m2])) continue;
      int c1 = popcount(m1), c2 = popcount(m2);
      bool ok = (c1 == 1 && c2 == 1) || (c1 == 1 && c2 == 2 && (m1 & m2) == m1) ||
                (c1 == 2 && c2 == 1 && (m1 & m2) == m2);
      check_internal(ok, "edge between regions violates the area trichotomy");
    }
  }
}

struct BranchDriver {
  PipelineContext* ctx;
  const TreeSink* sink;
  long next_id = 0;
  int depth_cap;

  std::vector<BranchOutput> run(const CompressionInstance& inst, int depth, long parent,
                                const std::string& via,
                                const std::vector<VertexSet>* warm,
                                const std::optional<Rational>& parent_measure,
                                bool via_contract) {
    if (ctx) ctx->count_node(depth);
    check_internal(depth <= depth_cap, "branching recursion exceeded the depth cap");

    if (ctx && ctx->use_memo && !sink) {
      auto it = ctx->branch_memo.find(inst.encode());
      if (it != ctx->branch_memo.end()) return it->second;
    }

    long id = next_id++;
    auto report = [&](const LpValue& lp, bool pruned, bool emitted) {
      if (sink) (*sink)({id, parent, via, pruned, emitted, measure_to_string(lp, inst.k)});
    };

    std::vector<BranchOutput> out;
    if (inst.infeasible) {
      report(LpValue::inf(), true, false);
      return out;
    }

    NonzeroScan scan =
        scan_nonzero_vertex(inst.graph, inst.w_set, warm, ctx ? ctx->lp_counter() : nullptr);
    const LpValue& lp = scan.base.objective;

    // Reduction Rule 1.
    if (lp.infinite || Rational(2 * inst.k) - lp.value < 0) {
      report(lp, true, false);
      if (ctx && ctx->use_memo && !sink) ctx->branch_memo.emplace(inst.encode(), out);
      return out;
    }
    Rational measure = Rational(2 * inst.k) - lp.value;
    if (runtime_checks() && parent_measure) {
      if (via_contract) {
        // Contract steps cannot raise the measure; a stalled measure must
        // surface a non-zero vertex so the next step decreases it.
        check_internal(measure <= *parent_measure, "contract step raised the measure");
        check_internal(measure <= *parent_measure - Rational(1, 2) ||
                           scan.vertex.has_value(),
                       "stalled contract step exposes no non-zero vertex");
      } else {
        check_internal(measure <= *parent_measure - Rational(1, 2),
                       "branching step decreased the measure by less than 1/2");
      }
    }

    auto recurse = [&](const CompressionInstance& child, Edit edit,
                       const std::vector<VertexSet>* child_warm, bool contract_step) {
      auto sub = run(child, depth + 1, id, edit.describe(), child_warm, measure, contract_step);
      for (auto& bo : sub) {
        BranchOutput shifted;
        shifted.inst = std::move(bo.inst);
        shifted.edits.reserve(bo.edits.size() + 1);
        shifted.edits.push_back(edit);
        shifted.edits.insert(shifted.edits.end(), bo.edits.begin(), bo.edits.end());
        out.push_back(std::move(shifted));
      }
    };

    // Branching Rule 1: torso the non-zero vertex, or delete it.
    if (scan.vertex) {
      report(lp, false, false);
      int v = *scan.vertex;

      CompressionInstance tor = torso(inst, VertexSet::single(inst.graph.capacity(), v));
      std::vector<VertexSet> torso_warm;
      for (const VertexSet& s : scan.base.constraints) {
        VertexSet s2 = s;
        if (s2.test(v)) s2.reset(v);
        if (s2.any()) torso_warm.push_back(std::move(s2));
      }
      recurse(tor, Edit{EditKind::Torso, v, -1, {}}, &torso_warm, false);

      CompressionInstance del = delete_vertex(inst, v);
      std::vector<VertexSet> del_warm;
      for (const VertexSet& s : scan.base.constraints)
        if (!s.test(v)) del_warm.push_back(s);
      recurse(del, Edit{EditKind::DeleteVertex, v, -1, {}}, &del_warm, false);

      if (ctx && ctx->use_memo && !sink) ctx->branch_memo.emplace(inst.encode(), out);
      return out;
    }

    // Branching Rule 2: keep the instance, then branch on every FC-boundary
    // vertex (contract into its terminal vs. delete).
    report(lp, false, true);
    out.push_back(BranchOutput{inst, {}});

    if (runtime_checks()) {
      Regions r = regions(inst.graph, inst.w_set);
      if (!r.parts.empty() && !r.parts[0].any()) verify_region_structure(inst.graph, r);
    }

    auto boundaries = fc_boundaries(inst.graph, inst.w_set);
    if (ctx && ctx->stats) {
      long children = 0;
      for (const auto& [w, boundary] : boundaries) children += 2 * boundary.count();
      long limit = 2L * inst.k * inst.k;
      if (children > ctx->stats->worst_rule2_children) {
        ctx->stats->worst_rule2_children = children;
        ctx->stats->worst_rule2_limit = limit;
      }
      if (children > limit) ctx->stats->rule2_within_limit = false;
    }

    for (const auto& [w, boundary] : boundaries) {
      std::vector<int> vs = boundary.to_vector();
      for (int v : vs) {
        CompressionInstance con = contract(inst, {{v, w}});
        recurse(con, Edit{EditKind::Contract, v, w, {}}, nullptr, true);

        CompressionInstance del = delete_vertex(inst, v);
        std::vector<VertexSet> del_warm;
        for (const VertexSet& s : scan.base.constraints)
          if (!s.test(v)) del_warm.push_back(s);
        recurse(del, Edit{EditKind::DeleteVertex, v, -1, {}}, &del_warm, false);
      }
    }

    if (ctx && ctx->use_memo && !sink) ctx->branch_memo.emplace(inst.encode(), out);
    return out;
  }

  static CompressionInstance delete_vertex(const CompressionInstance& inst, int v) {
    CompressionInstance out;
    out.graph = inst.graph.without_vertex(v);
    out.w_set = inst.w_set;
    out.k = inst.k - 1;
    out.infeasible = inst.infeasible;
    for (const auto& p : inst.pairs)
      if (p.first != v && p.second != v) out.pairs.push_back(p);
    return out;
  }
};

}  // namespace

std::vector<BranchOutput> branching(const CompressionInstance& inst, PipelineContext* ctx,
                                    const TreeSink* sink) {
  BranchDriver driver{ctx, sink, 0, 4 * std::max(inst.k, 0) + 4};
  return driver.run(inst, 0, -1, "root", nullptr, std::nullopt, false);
}

bool is_contractible_solution(const CompressionInstance& inst, const VertexSet& x) {
  auto boundaries = fc_boundaries(inst.graph, inst.w_set);
  for (const auto& [w, boundary] : boundaries) {
    if (boundary.intersects(x)) return false;
    VertexSet comp_w =
        inst.graph.reachable(VertexSet::single(inst.graph.capacity(), w), x);
    if (comp_w.intersects(boundary)) return false;
  }
  return true;
}

CompressionInstance make_bipedal_one(const CompressionInstance& inst) {
  if (inst.infeasible) return trivial_no_instance(inst.graph.capacity());
  Regions r = regions(inst.graph, inst.w_set);
  if (!r.parts.empty() && r.parts[0].any()) return trivial_no_instance(inst.graph.capacity());

  std::vector<std::pair<int, int>> mapping;
  for (size_t i = 0; i < r.w_ids.size(); ++i) {
    uint32_t mask = uint32_t(1) << i;
    VertexSet part = r.parts[mask];
    VertexSet boundary = inner_boundary(inst.graph, part) - inst.w_set;
    boundary.for_each([&](int v) { mapping.emplace_back(v, r.w_ids[i]); });
  }
  CompressionInstance out = contract(inst, mapping);
  if (out.infeasible) return trivial_no_instance(inst.graph.capacity());
  if (runtime_checks())
    check_internal(is_bipedal(out.graph, out.w_set), "contracted instance is not bipedal");
  return out;
}

std::vector<BranchOutput> make_bipedal(const CompressionInstance& inst, PipelineContext* ctx) {
  std::vector<BranchOutput> outs = branching(inst, ctx);
  for (auto& bo : outs) {
    CompressionInstance bip = make_bipedal_one(bo.inst);
    if (!(bip == bo.inst)) {
      bo.inst = std::move(bip);
      bo.edits.push_back(Edit{EditKind::BipedalContract, -1, -1, {}});
    }
  }
  return outs;
}

bool is_bipedal(const Graph& g, const VertexSet& w_set) {
  for (const VertexSet& comp : g.components(w_set)) {
    VertexSet nb(g.capacity());
    comp.for_each([&](int v) { nb |= g.neighbors(v); });
    nb -= comp;
    if ((nb & w_set).count() > 2) return false;
  }
  return true;
}

}  // namespace vmc
