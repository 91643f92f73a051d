#include "vmc/lp.hpp"

#include <algorithm>
#include <functional>

#include "vmc/errors.hpp"
#include "vmc/separators.hpp"

namespace vmc {

namespace {

bool edge_inside(const Graph& g, const VertexSet& w_set) {
  bool found = false;
  w_set.for_each([&](int w) {
    if (!found && g.has_vertex(w) && g.neighbors(w).intersects(w_set)) found = true;
  });
  return found;
}

// Exact simplex (Bland's rule) for the packing dual of the restricted LP:
//   maximize sum(y_j)  s.t.  for each used vertex r: sum_{j : r in S_j} y_j <= 1
// The row duals at optimality are an optimal solution of the restricted
// covering LP, i.e. the d-values we are after.
struct PackingResult {
  Rational obj;
  std::vector<Rational> dual;  // per row
};

PackingResult solve_packing(const std::vector<std::vector<int>>& col_rows, int nrows) {
  int p = int(col_rows.size());
  int width = p + nrows + 1;  // structurals, slacks, rhs
  std::vector<std::vector<Rational>> t(nrows, std::vector<Rational>(width, Rational(0)));
  std::vector<Rational> z(width, Rational(0));
  std::vector<int> basis(nrows);

  for (int j = 0; j < p; ++j)
    for (int r : col_rows[j]) t[r][j] = 1;
  for (int r = 0; r < nrows; ++r) {
    t[r][p + r] = 1;
    t[r][width - 1] = 1;
    basis[r] = p + r;
  }
  for (int j = 0; j < p; ++j) z[j] = 1;  // reduced costs vs. all-slack basis
  Rational zval(0);

  while (true) {
    int enter = -1;
    for (int j = 0; j < width - 1; ++j)
      if (z[j] > 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int r = 0; r < nrows; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][width - 1] / t[r][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        best = ratio;
        leave = r;
      }
    }
    check_internal(leave >= 0, "packing LP unbounded");
    Rational piv = t[leave][enter];
    for (int j = 0; j < width; ++j) t[leave][j] /= piv;
    for (int r = 0; r < nrows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      Rational f = t[r][enter];
      for (int j = 0; j < width; ++j) t[r][j] -= f * t[leave][j];
    }
    Rational zf = z[enter];
    for (int j = 0; j < width; ++j) z[j] -= zf * t[leave][j];
    zval += zf * t[leave][width - 1];
    basis[leave] = enter;
  }

  PackingResult res;
  res.obj = zval;
  res.dual.resize(nrows);
  for (int r = 0; r < nrows; ++r) {
    res.dual[r] = -z[p + r];
    check_internal(res.dual[r] >= 0, "negative dual price");
  }
  return res;
}

// Vertex-weighted shortest clean path between two distinct terminals;
// interior vertices carry the given weights, terminals weigh nothing.
// Returns the most violated path (weight < 1) or nothing.
struct ViolatedPath {
  Rational weight;
  VertexSet support;
};

std::optional<ViolatedPath> most_violated_path(const Graph& g, const VertexSet& w_set,
                                               const std::vector<Rational>& d) {
  int cap = g.capacity();
  std::vector<int> terms = (w_set & g.vertices()).to_vector();
  std::optional<ViolatedPath> best;

  std::vector<Rational> dist(cap);
  std::vector<int> parent(cap);
  std::vector<char> state(cap);  // 0 unseen, 1 open, 2 done

  for (size_t i = 0; i < terms.size(); ++i) {
    for (size_t j = i + 1; j < terms.size(); ++j) {
      int ws = terms[i], wt = terms[j];
      std::fill(state.begin(), state.end(), 0);
      VertexSet interior = g.vertices() - w_set;
      (g.neighbors(ws) & interior).for_each([&](int u) {
        dist[u] = d[u];
        parent[u] = -1;
        state[u] = 1;
      });
      while (true) {
        int u = -1;
        for (int v = 0; v < cap; ++v)
          if (state[v] == 1 && (u < 0 || dist[v] < dist[u])) u = v;
        if (u < 0) break;
        state[u] = 2;
        if (g.neighbors(u).test(wt)) {
          if (!best || dist[u] < best->weight) {
            VertexSet sup(cap);
            for (int x = u; x >= 0; x = parent[x]) sup.set(x);
            best = ViolatedPath{dist[u], sup};
          }
          break;  // remaining labels are no shorter
        }
        (g.neighbors(u) & interior).for_each([&](int v) {
          if (state[v] == 2) return;
          Rational nd = dist[u] + d[v];
          if (state[v] == 0 || nd < dist[v]) {
            dist[v] = nd;
            parent[v] = u;
            state[v] = 1;
          }
        });
      }
    }
  }
  if (best && best->weight < 1) return best;
  return std::nullopt;
}

}  // namespace

LpCore opt_lp_core(const Graph& g, const VertexSet& w_set,
                   const std::vector<VertexSet>* warm_constraints, long* solve_counter) {
  if (solve_counter) ++*solve_counter;
  LpCore core;
  core.values.assign(g.capacity(), Rational(0));

  if ((w_set & g.vertices()).count() <= 1) {
    core.objective = LpValue::finite(Rational(0));
    return core;
  }
  if (edge_inside(g, w_set)) {
    core.objective = LpValue::inf();
    return core;
  }

  VertexSet interior = g.vertices() - w_set;
  if (warm_constraints) {
    for (const VertexSet& s : *warm_constraints) {
      if (!s.any() || !s.is_subset_of(interior)) continue;
      if (std::find(core.constraints.begin(), core.constraints.end(), s) ==
          core.constraints.end())
        core.constraints.push_back(s);
    }
  }

  while (true) {
    // Row space: vertices appearing in at least one support.
    std::vector<int> row_of(g.capacity(), -1);
    std::vector<int> row_vertex;
    std::vector<std::vector<int>> col_rows(core.constraints.size());
    for (size_t j = 0; j < core.constraints.size(); ++j) {
      core.constraints[j].for_each([&](int v) {
        if (row_of[v] < 0) {
          row_of[v] = int(row_vertex.size());
          row_vertex.push_back(v);
        }
        col_rows[j].push_back(row_of[v]);
      });
    }

    Rational obj(0);
    std::fill(core.values.begin(), core.values.end(), Rational(0));
    if (!core.constraints.empty()) {
      PackingResult pr = solve_packing(col_rows, int(row_vertex.size()));
      obj = pr.obj;
      for (size_t r = 0; r < row_vertex.size(); ++r) core.values[row_vertex[r]] = pr.dual[r];
    }

    auto violated = most_violated_path(g, w_set, core.values);
    if (!violated) {
      core.objective = LpValue::finite(obj);
      return core;
    }
    core.constraints.push_back(violated->support);
  }
}

namespace {

// Deterministic per-vertex torso probe. The torso of {v} encodes L_P with the
// extra constraint d_v = 0, so its optimum strictly exceeds the base optimum
// exactly when v is non-zero.
bool nonzero_probe(const Graph& g, const VertexSet& w_set, int v, const LpCore& base,
                   long* counter) {
  Graph tg = g.torso(VertexSet::single(g.capacity(), v));
  std::vector<VertexSet> warm;
  warm.reserve(base.constraints.size());
  for (const VertexSet& s : base.constraints) {
    VertexSet s2 = s;
    if (s2.test(v)) s2.reset(v);
    if (s2.any()) warm.push_back(std::move(s2));
  }
  LpCore probe = opt_lp_core(tg, w_set, &warm, counter);
  if (probe.objective.infinite) return true;
  return probe.objective.value > base.objective.value;
}

std::vector<Rational> round_half_integral(const Graph& g, const VertexSet& w_set,
                                          const Rational& opt,
                                          const std::vector<Rational>& raw) {
  bool already = true;
  for (const Rational& r : raw)
    if (!is_half_integral_value(r)) {
      already = false;
      break;
    }
  if (already) return raw;

  // Candidate vertices: interior vertices lying on some clean W-W path,
  // i.e. reachable through V\W from two distinct terminals. Everything else
  // is 0 in some optimum.
  int cap = g.capacity();
  VertexSet interior = g.vertices() - w_set;
  std::vector<int> hits(cap, 0);
  w_set.for_each([&](int w) {
    if (!g.has_vertex(w)) return;
    VertexSet from_w = g.reachable(g.neighbors(w) & interior, w_set);
    from_w.for_each([&](int v) { ++hits[v]; });
  });
  std::vector<int> cand;
  for (int v = 0; v < cap; ++v)
    if (hits[v] >= 2) cand.push_back(v);
  std::sort(cand.begin(), cand.end(), [&](int a, int b) {
    if (raw[a] != raw[b]) return raw[a] > raw[b];
    return a < b;
  });

  std::vector<Rational> assign(cap, Rational(0));
  const Rational half(1, 2), one(1);
  std::vector<Rational> choices = {Rational(0), half, one};

  std::function<bool(size_t, Rational)> dfs = [&](size_t idx, Rational sum) -> bool {
    if (sum > opt) return false;
    // Optimistic completion: unassigned candidates at weight 1.
    std::vector<Rational> probe = assign;
    for (size_t i = idx; i < cand.size(); ++i) probe[cand[i]] = one;
    if (most_violated_path(g, w_set, probe)) return false;
    if (idx == cand.size()) return sum == opt;
    int v = cand[idx];
    for (const Rational& c : choices) {
      assign[v] = c;
      if (dfs(idx + 1, sum + c)) return true;
    }
    assign[v] = 0;
    return false;
  };
  check_internal(dfs(0, Rational(0)), "no half-integral optimum found");
  return assign;
}

}  // namespace

std::pair<LpValue, std::optional<LpSolution>> opt_lp(const Graph& g, const VertexSet& w_set) {
  LpCore core = opt_lp_core(g, w_set);
  if (core.objective.infinite) return {core.objective, std::nullopt};
  LpSolution sol;
  sol.objective = core.objective.value;
  sol.values = core.values;
  sol.half_integral = round_half_integral(g, w_set, sol.objective, sol.values);
  return {core.objective, std::move(sol)};
}

NonzeroScan scan_nonzero_vertex(const Graph& g, const VertexSet& w_set,
                                const std::vector<VertexSet>* warm_constraints,
                                long* solve_counter) {
  NonzeroScan scan;
  scan.base = opt_lp_core(g, w_set, warm_constraints, solve_counter);
  if (scan.base.objective.infinite) return scan;
  for (int v = 0; v < g.capacity(); ++v) {
    if (scan.base.values[v] == 0) continue;
    if (nonzero_probe(g, w_set, v, scan.base, solve_counter)) {
      scan.vertex = v;
      return scan;
    }
  }
  return scan;
}

bool is_nonzero_vertex(const Graph& g, const VertexSet& w_set, int v) {
  if (w_set.test(v)) throw PreconditionError("v lies in W");
  if (!g.has_vertex(v)) throw PreconditionError("v is not a vertex");
  LpCore base = opt_lp_core(g, w_set);
  if (base.objective.infinite) return false;
  if (base.values[v] == 0) return false;  // the found optimum already assigns 0
  return nonzero_probe(g, w_set, v, base, nullptr);
}

std::optional<int> find_nonzero_vertex(const Graph& g, const VertexSet& w_set) {
  return scan_nonzero_vertex(g, w_set).vertex;
}

bool check_lemma_2lp_eq_mincut(const Graph& g, const VertexSet& w_set) {
  if (find_nonzero_vertex(g, w_set))
    throw PreconditionError("a non-zero vertex exists; the lemma does not apply");
  LpCore core = opt_lp_core(g, w_set);
  if (core.objective.infinite) return true;  // both sides infinite
  Rational cut_sum(0);
  bool finite = true;
  (w_set & g.vertices()).for_each([&](int w) {
    if (!finite) return;
    auto mc = min_vertex_separator(g, VertexSet::single(g.capacity(), w),
                                   (w_set & g.vertices()) - VertexSet::single(g.capacity(), w));
    if (!mc)
      finite = false;
    else
      cut_sum += mc->first;
  });
  if (!finite) return false;  // finite LP against an infinite cut sum
  return Rational(2) * core.objective.value == cut_sum;
}

}  // namespace vmc
