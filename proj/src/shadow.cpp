#include "vmc/shadow.hpp"

#include <algorithm>
#include <cmath>

#include "vmc/errors.hpp"
#include "vmc/prng.hpp"
#include "vmc/rational.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vmc {

VertexSet shadow(const Graph& g, const VertexSet& w_set, const VertexSet& y) {
  if (y.intersects(w_set)) throw PreconditionError("Y intersects W");
  VertexSet reached = g.reachable(w_set, y);
  return g.vertices() - reached - y - w_set;
}

ImportantSeparatorIndex build_separator_index(const Graph& g, const VertexSet& w_set, int k,
                                              bool parallel) {
  ImportantSeparatorIndex idx;
  idx.cuts.resize(g.capacity());
  std::vector<int> verts = (g.vertices() - w_set).to_vector();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 2) if (parallel)
#endif
  for (size_t i = 0; i < verts.size(); ++i) {
    int v = verts[i];
    auto seps =
        enumerate_important_separators(g, VertexSet::single(g.capacity(), v), w_set, k);
    idx.cuts[v].reserve(seps.size());
    for (auto& s : seps) idx.cuts[v].push_back(std::move(s.cut));
  }
  (void)parallel;
  return idx;
}

VertexSet covering_with_index(const Graph& g, const VertexSet& w_set,
                              const ImportantSeparatorIndex& idx, const Coloring& c) {
  VertexSet z(g.capacity());
  (g.vertices() - w_set).for_each([&](int v) {
    for (const VertexSet& cut : idx.cuts[v]) {
      if (cut.is_subset_of(c.red)) {  // empty cuts qualify under any coloring
        z.set(v);
        break;
      }
    }
  });
  return z;
}

VertexSet covering_from_coloring(const Graph& g, const VertexSet& w_set, int k,
                                 const Coloring& c) {
  return covering_with_index(g, w_set, build_separator_index(g, w_set, k), c);
}

bool is_k_shadow_removable(const Graph& g, const VertexSet& w_set, const VertexSet& y,
                           int k) {
  if (y.intersects(w_set)) throw PreconditionError("Y intersects W");
  if (y.count() > k) return false;
  VertexSet sh = shadow(g, w_set, y);
  bool ok = true;
  sh.for_each([&](int v) {
    if (!ok) return;
    auto seps =
        enumerate_important_separators(g, VertexSet::single(g.capacity(), v), w_set, k);
    bool covered = false;
    for (const auto& s : seps)
      if (s.cut.is_subset_of(y)) {
        covered = true;
        break;
      }
    if (!covered) ok = false;
  });
  if (!ok) return false;
  y.for_each([&](int v) {
    if (!ok) return;
    auto seps =
        enumerate_important_separators(g, VertexSet::single(g.capacity(), v), w_set, k);
    for (const auto& s : seps)
      if (s.cut.is_subset_of(y)) {
        ok = false;
        break;
      }
  });
  return ok;
}

namespace {

std::vector<uint64_t> primes_above(uint64_t lower, int count) {
  std::vector<uint64_t> out;
  uint64_t x = std::max<uint64_t>(lower, 2);
  while (int(out.size()) < count) {
    bool prime = x >= 2;
    for (uint64_t d = 2; d * d <= x && prime; ++d)
      if (x % d == 0) prime = false;
    if (prime) out.push_back(x);
    ++x;
  }
  return out;
}

}  // namespace

SplitterFamily build_splitter(int n, int r, int l) {
  if (l < r * r) throw PreconditionError("splitter needs l >= r^2");
  if (n < 0 || r < 1) throw PreconditionError("bad splitter parameters");
  SplitterFamily fam;
  fam.n = n;
  fam.r = r;
  fam.l = l;
  if (n <= l) {
    fam.fns.push_back({true, 0, 0});
    return fam;
  }
  // Each pairwise difference below n has at most log2(n) prime divisors, so
  // among any m+1 primes above r at least one keeps a fixed r-subset distinct
  // modulo q; the inner hash (b * x mod q) mod l is collision-free for some
  // b in [1, q) whenever l >= r^2 and q > r.
  int log2n = 1;
  while ((1LL << log2n) < n) ++log2n;
  int m = (r * (r - 1) / 2) * log2n;
  std::vector<uint64_t> qs = primes_above(uint64_t(r) + 1, m + 1);
  for (uint64_t q : qs)
    for (uint64_t b = 1; b < q; ++b) fam.fns.push_back({false, q, b});
  return fam;
}

long default_randomized_trials(int k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  // p = min(1/k^2, 1/2); success probability P = p^k (1-p)^(k^2);
  // the trial count is ceil(100 / P), computed exactly.
  long denom = std::max<long>(2, long(k) * k);
  BigInt num = 1, den = 1;
  for (int i = 0; i < k * k; ++i) num *= (denom - 1);
  for (int i = 0; i < k + k * k; ++i) den *= denom;
  BigInt trials = (BigInt(100) * den + num - 1) / num;
  return trials.convert_to<long>();
}

CoverFamily randomized_cover_family(const Graph& g, const VertexSet& w_set, int k,
                                    long trials, uint64_t seed) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (trials < 0) trials = default_randomized_trials(k);
  ImportantSeparatorIndex idx = build_separator_index(g, w_set, k);
  uint64_t denom = std::max<uint64_t>(2, uint64_t(k) * uint64_t(k));
  VertexSet interior = g.vertices() - w_set;

  std::vector<VertexSet> sets(trials, VertexSet(g.capacity()));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (long t = 0; t < trials; ++t) {
    SplitMix64 rng(mix_seed(seed, uint64_t(t)));
    Coloring c{VertexSet(g.capacity())};
    interior.for_each([&](int v) {
      if (rng.bernoulli(1, denom)) c.red.set(v);
    });
    sets[t] = covering_with_index(g, w_set, idx, c);
  }

  CoverFamily fam;
  for (VertexSet& z : sets) {
    if (std::find(fam.sets.begin(), fam.sets.end(), z) == fam.sets.end())
      fam.sets.push_back(std::move(z));
  }
  return fam;
}

namespace {

CoverFamily deterministic_family_impl(const Graph& g, const VertexSet& w_set, int k,
                                      bool parallel) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  int r = k + k * k;
  int l = r * r;
  SplitterFamily splitter = build_splitter(g.capacity(), r, l);
  ImportantSeparatorIndex idx = build_separator_index(g, w_set, k, parallel);
  VertexSet interior = g.vertices() - w_set;

  // A pattern paints exactly k of the l cells red; only its trace on the
  // cells a function actually hits changes the induced coloring. Enumerating
  // red subsets of each image (sizes that leave room for the remaining red
  // cells outside the image) therefore walks every induced coloring once.
  std::vector<VertexSet> colorings;
  {
    std::vector<VertexSet> seen;
    for (const auto& fn : splitter.fns) {
      std::vector<VertexSet> cell_members(l, VertexSet(g.capacity()));
      std::vector<int> image;
      interior.for_each([&](int v) {
        int cell = fn.eval(v, l);
        if (!cell_members[cell].any()) image.push_back(cell);
        cell_members[cell].set(v);
      });
      std::sort(image.begin(), image.end());
      int outside = l - int(image.size());

      std::vector<int> pick;
      std::function<void(size_t)> rec = [&](size_t from) {
        int sz = int(pick.size());
        if (sz <= k && outside >= k - sz) {
          VertexSet red(g.capacity());
          for (int cell : pick) red |= cell_members[cell];
          if (std::find(seen.begin(), seen.end(), red) == seen.end()) {
            seen.push_back(red);
            colorings.push_back(red);
          }
        }
        if (sz == k) return;
        for (size_t i = from; i < image.size(); ++i) {
          pick.push_back(image[i]);
          rec(i + 1);
          pick.pop_back();
        }
      };
      rec(0);
    }
  }

  std::vector<VertexSet> sets(colorings.size(), VertexSet(g.capacity()));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
#endif
  for (size_t i = 0; i < colorings.size(); ++i)
    sets[i] = covering_with_index(g, w_set, idx, Coloring{colorings[i]});
  (void)parallel;

  CoverFamily fam;
  for (VertexSet& z : sets) {
    if (std::find(fam.sets.begin(), fam.sets.end(), z) == fam.sets.end())
      fam.sets.push_back(std::move(z));
  }
  return fam;
}

}  // namespace

CoverFamily deterministic_cover_family(const Graph& g, const VertexSet& w_set, int k) {
  return deterministic_family_impl(g, w_set, k, true);
}

CoverFamily deterministic_cover_family_serial(const Graph& g, const VertexSet& w_set, int k) {
  return deterministic_family_impl(g, w_set, k, false);
}

std::vector<CompressionInstance> shadow_removal_step(const CompressionInstance& inst,
                                                     CoverMode mode, uint64_t seed,
                                                     long trials) {
  if (inst.k <= 0) return {inst};  // a size-0 solution needs no shadow removal
  CoverFamily fam = mode == CoverMode::Deterministic
                        ? deterministic_cover_family(inst.graph, inst.w_set, inst.k)
                        : randomized_cover_family(inst.graph, inst.w_set, inst.k, trials, seed);
  std::vector<CompressionInstance> out;
  std::vector<std::string> seen;
  for (const VertexSet& z : fam.sets) {
    CompressionInstance t = torso(inst, z);
    std::string enc = t.encode();
    if (std::find(seen.begin(), seen.end(), enc) == seen.end()) {
      seen.push_back(std::move(enc));
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace vmc
