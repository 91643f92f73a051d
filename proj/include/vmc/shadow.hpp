#pragma once
#include <cstdint>
#include <vector>

#include "vmc/instance.hpp"
#include "vmc/separators.hpp"

namespace vmc {

// Two-coloring of V\W, stored as its red side; everything else is blue.
struct Coloring {
  VertexSet red;
};

// (n, r, l)-splitter: a family of functions [n] -> [l] such that every
// size-r subset of [n] is mapped injectively by at least one member.
struct SplitterFamily {
  struct Fn {
    bool identity = false;  // valid whenever n <= l
    uint64_t q = 0, b = 0;  // otherwise i -> ((b * (i mod q)) mod q) mod l

    int eval(int i, int l) const {
      if (identity) return i;
      return int(((b * (uint64_t(i) % q)) % q) % uint64_t(l));
    }
  };
  int n = 0, r = 0, l = 0;
  std::vector<Fn> fns;
};

// Deterministic construction; requires l >= r^2. When n <= l a single
// identity-style function suffices; otherwise a two-level prime family
// {i -> ((b*(i mod q)) mod q) mod l} over enough primes q > r covers every
// r-subset by the usual perfect-hashing argument.
SplitterFamily build_splitter(int n, int r, int l);

struct CoverFamily {
  std::vector<VertexSet> sets;  // each disjoint from W, deduplicated
};

// Shadow of y with respect to W: vertices outside W∪y with no W-connection
// in g - y. Throws when y intersects W.
VertexSet shadow(const Graph& g, const VertexSet& w_set, const VertexSet& y);

// The three defining conditions: |y| <= k; every shadow vertex has an
// important {v}-W separator of size <= k inside y; no vertex of y has one
// fully inside y.
bool is_k_shadow_removable(const Graph& g, const VertexSet& w_set, const VertexSet& y, int k);

// Z = vertices with some important {v}-W separator of size <= k colored
// entirely red. Vertices whose separator family contains the empty set
// (W-free components) always qualify.
VertexSet covering_from_coloring(const Graph& g, const VertexSet& w_set, int k,
                                 const Coloring& c);

// Per-vertex important-separator lists, shared across the many colorings a
// cover family evaluates. Building it is the covering stage's hot loop and
// parallelizes over vertices.
struct ImportantSeparatorIndex {
  std::vector<std::vector<VertexSet>> cuts;  // indexed by vertex id
};
ImportantSeparatorIndex build_separator_index(const Graph& g, const VertexSet& w_set, int k,
                                              bool parallel = true);
VertexSet covering_with_index(const Graph& g, const VertexSet& w_set,
                              const ImportantSeparatorIndex& idx, const Coloring& c);

// Independent single-coloring trials, each vertex red with probability
// min(1/k^2, 1/2). trials < 0 selects the default ceil(100/P) with
// P = p^k (1-p)^(k^2).
CoverFamily randomized_cover_family(const Graph& g, const VertexSet& w_set, int k,
                                    long trials, uint64_t seed);
long default_randomized_trials(int k);

// Splitter-derandomized family: all colorings induced by splitter functions
// and red-cell patterns of weight k. Covers every k-shadow-removable set.
// The parallel variant and the serial reference produce identical output.
CoverFamily deterministic_cover_family(const Graph& g, const VertexSet& w_set, int k);
CoverFamily deterministic_cover_family_serial(const Graph& g, const VertexSet& w_set, int k);

enum class CoverMode { Deterministic, Randomized };

// Partial branching step: torso the instance by every set in the cover
// family. k = 0 needs no covering and passes the instance through.
std::vector<CompressionInstance> shadow_removal_step(const CompressionInstance& inst,
                                                     CoverMode mode, uint64_t seed = 0,
                                                     long trials = -1);

}  // namespace vmc
