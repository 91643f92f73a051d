#include "vmc/testkit.hpp"

#include <algorithm>
#include <cmath>

#include "vmc/errors.hpp"
#include "vmc/prng.hpp"
#include "vmc/shadow.hpp"

namespace vmc {

namespace {

// Size-then-colex enumeration over a candidate list; stops when f accepts.
template <class F>
void for_each_subset(const std::vector<int>& ids, int max_size, F f) {
  int n = int(ids.size());
  for (int size = 0; size <= std::min(max_size, n); ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      if (f(pick)) return;
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
}

VertexSet pick_to_set(const std::vector<int>& ids, const std::vector<int>& pick, int cap) {
  VertexSet x(cap);
  for (int i : pick) x.set(ids[i]);
  return x;
}

}  // namespace

SolverResult brute_force_vmc(const MulticutInstance& inst) {
  SolverResult res;
  std::vector<int> ids = inst.graph.vertices().to_vector();
  for_each_subset(ids, inst.k, [&](const std::vector<int>& pick) {
    VertexSet x = pick_to_set(ids, pick, inst.graph.capacity());
    if (!is_multicut(inst.graph, inst.pairs, x)) return false;
    res.yes = true;
    res.witness = Witness{x};
    return true;
  });
  return res;
}

CompressionOracle brute_force_compression(const CompressionInstance& inst) {
  CompressionOracle oracle;
  if (inst.infeasible || inst.k < 0) return oracle;
  std::vector<int> ids = (inst.graph.vertices() - inst.w_set).to_vector();
  int opt_size = -1;
  for_each_subset(ids, inst.k, [&](const std::vector<int>& pick) {
    VertexSet x = pick_to_set(ids, pick, inst.graph.capacity());
    if (!is_compression_solution(inst, x)) return false;
    if (!oracle.result.yes) {
      oracle.result.yes = true;
      oracle.result.witness = Witness{x};
      opt_size = int(pick.size());
    }
    if (!oracle.shadowless_exists && shadow(inst.graph, inst.w_set, x).empty()) {
      oracle.shadowless_exists = true;
      if (int(pick.size()) == opt_size) oracle.optimal_shadowless_exists = true;
    }
    return false;  // keep scanning for the shadowless flags
  });
  return oracle;
}

MulticutInstance gen_random_instance(uint64_t seed, int n, double edge_prob, int num_pairs,
                                     int k) {
  if (n < 0 || k < 0 || edge_prob < 0.0 || edge_prob > 1.0 || num_pairs < 0)
    throw PreconditionError("generator parameters out of range");
  SplitMix64 rng(seed);
  MulticutInstance inst;
  inst.graph = Graph(n);
  inst.k = k;

  uint64_t threshold =
      edge_prob >= 1.0 ? ~uint64_t(0) : uint64_t(std::ldexp(edge_prob, 64));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      uint64_t roll = rng.next();
      bool take = edge_prob >= 1.0 ? true : roll < threshold;
      if (take) inst.graph.add_edge(u, v);
    }

  long max_pairs = (long(n) * (n - 1)) / 2;
  num_pairs = int(std::min<long>(num_pairs, max_pairs));
  std::vector<VertexPair> pairs;
  while (int(pairs.size()) < num_pairs) {
    int s = int(rng.below(uint64_t(n)));
    int t = int(rng.below(uint64_t(n)));
    if (s == t) continue;
    VertexPair p{std::min(s, t), std::max(s, t)};
    if (std::find(pairs.begin(), pairs.end(), p) == pairs.end()) pairs.push_back(p);
  }
  inst.pairs = normalize_pairs(std::move(pairs));
  return inst;
}

CompressionInstance gen_random_compression(uint64_t seed, int n, double edge_prob,
                                           int num_pairs, int k, int max_tries) {
  SplitMix64 rng(mix_seed(seed, 0x9e3779b9));
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    // A fresh base instance every few W draws; sparse graphs with few pairs
    // admit small multicuts often enough for this to converge quickly.
    MulticutInstance base =
        gen_random_instance(mix_seed(seed, uint64_t(attempt / 8)), n, edge_prob, num_pairs, k);
    int wsize = int(rng.below(uint64_t(std::min(k + 2, n + 1))));  // 0..min(k+1, n)
    VertexSet w(n);
    while (w.count() < wsize) w.set(int(rng.below(uint64_t(n))));
    if (is_multicut(base.graph, base.pairs, w))
      return CompressionInstance{base.graph, base.pairs, w, k, false};
    if (attempt % 8 == 7) {
      // Random draws keep missing: fall back to the canonical brute-force
      // multicut of this instance when one of size k+1 exists.
      MulticutInstance relaxed = base;
      relaxed.k = k + 1;
      SolverResult any = brute_force_vmc(relaxed);
      if (any.yes)
        return CompressionInstance{base.graph, base.pairs, any.witness->vertices, k, false};
    }
  }
  throw InternalError("gen_random_compression: rejection sampling exhausted");
}

PlantedShadowRemovable plant_shadow_removable(uint64_t seed, int n, int k, int max_tries) {
  if (n < 2 || k < 0) throw PreconditionError("plant parameters out of range");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    // Fresh random graph each attempt, moderately sparse.
    uint64_t gseed = rng.next();
    Graph g(n);
    {
      SplitMix64 gr(gseed);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (gr.bernoulli(3, 10)) g.add_edge(u, v);
    }
    int wsize = 1 + int(rng.below(uint64_t(std::max(1, std::min(n / 2, k + 1)))));
    VertexSet w(n);
    while (w.count() < wsize) w.set(int(rng.below(uint64_t(n))));

    if (k == 0) {
      VertexSet y(n);
      if (shadow(g, w, y).empty()) return {g, w, y};
      continue;
    }

    // Candidate Y: either a random small set or an important separator of a
    // random vertex, which tends to produce nonempty shadows.
    VertexSet y(n);
    if (rng.bernoulli(1, 2)) {
      int ysize = 1 + int(rng.below(uint64_t(k)));
      int guard = 0;
      while (y.count() < ysize && guard++ < 4 * n) {
        int v = int(rng.below(uint64_t(n)));
        if (!w.test(v)) y.set(v);
      }
    } else {
      VertexSet rest = g.vertices() - w;
      if (rest.empty()) continue;
      std::vector<int> ids = rest.to_vector();
      int v = ids[rng.below(ids.size())];
      auto seps = enumerate_important_separators(g, VertexSet::single(n, v), w, k);
      if (seps.empty()) continue;
      y = seps[rng.below(seps.size())].cut;
    }
    if (!y.any() || y.count() > k) continue;
    if (is_k_shadow_removable(g, w, y, k)) return {g, w, y};
  }
  throw InternalError("plant_shadow_removable: rejection sampling exhausted");
}

std::vector<VertexSet> brute_force_minimal_separators(const Graph& g, const VertexSet& s_set,
                                                      const VertexSet& t_set) {
  std::vector<VertexSet> out;
  std::vector<int> ids = (g.vertices() - s_set - t_set).to_vector();
  int n = int(ids.size());
  auto separates = [&](const VertexSet& x) {
    return !g.reachable(s_set, x).intersects(t_set);
  };
  for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
    VertexSet x(g.capacity());
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) x.set(ids[i]);
    if (!separates(x)) continue;
    bool minimal = true;
    for (int i = 0; i < n && minimal; ++i) {
      if (!(mask >> i & 1)) continue;
      VertexSet x2 = x;
      x2.reset(ids[i]);
      if (separates(x2)) minimal = false;
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<VertexSet> brute_force_important_separators(const Graph& g, const VertexSet& s_set,
                                                        const VertexSet& t_set, int k) {
  std::vector<VertexSet> minimal = brute_force_minimal_separators(g, s_set, t_set);
  std::vector<VertexSet> reaches;
  reaches.reserve(minimal.size());
  for (const VertexSet& x : minimal) reaches.push_back(g.reachable(s_set, x));
  std::vector<VertexSet> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    if (minimal[i].count() > k) continue;
    bool dominated = false;
    for (size_t j = 0; j < minimal.size() && !dominated; ++j) {
      if (i == j) continue;
      if (reaches[i].is_subset_of(reaches[j]) && reaches[i] != reaches[j] &&
          minimal[j].count() <= minimal[i].count())
        dominated = true;
    }
    if (!dominated) out.push_back(minimal[i]);
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

std::optional<int> brute_force_min_multiway_cut(const Graph& g, const VertexSet& w_set) {
  std::vector<int> ids = (g.vertices() - w_set).to_vector();
  std::optional<int> best;
  for_each_subset(ids, int(ids.size()), [&](const std::vector<int>& pick) {
    VertexSet x = pick_to_set(ids, pick, g.capacity());
    if (!is_multiway_cut(g, w_set, x)) return false;
    best = int(pick.size());
    return true;  // size-ordered enumeration: first hit is minimum
  });
  return best;
}

}  // namespace vmc
