#pragma once
#include <cstdint>
#include <optional>

#include "vmc/bipedal_solver.hpp"
#include "vmc/instance.hpp"

namespace vmc {

// Ground-truth oracles and seeded generators. Everything here is the single
// source of truth the solver-side results are compared against, so nothing
// below may call into the pipeline.

// Subset enumeration in size-then-colex order; the witness is canonical
// (least valid subset).
SolverResult brute_force_vmc(const MulticutInstance& inst);

struct CompressionOracle {
  SolverResult result;
  bool shadowless_exists = false;  // some solution leaves an empty shadow
  // Some minimum-size solution leaves an empty shadow. The pipeline's
  // bipedal stage preserves exactly these (solutions padded with unreachable
  // vertices only to empty their shadow are legitimately dropped).
  bool optimal_shadowless_exists = false;
};
CompressionOracle brute_force_compression(const CompressionInstance& inst);

// G(n, p)-style instance; identical seeds give byte-identical instances on
// every platform (SplitMix64 throughout).
MulticutInstance gen_random_instance(uint64_t seed, int n, double edge_prob, int num_pairs,
                                     int k);

// Random compression instance: a random graph plus a rejection-sampled W
// that is a multicut of the drawn pairs, |W| <= k+1.
CompressionInstance gen_random_compression(uint64_t seed, int n, double edge_prob,
                                           int num_pairs, int k, int max_tries = 4000);

struct PlantedShadowRemovable {
  Graph graph;
  VertexSet w_set;
  VertexSet y;
};

// Rejection-samples (G, W, Y) until Y checks out as k-shadow-removable
// (for k >= 1 additionally with a nonempty Y). Throws on exhaustion.
PlantedShadowRemovable plant_shadow_removable(uint64_t seed, int n, int k,
                                              int max_tries = 20000);

// Brute-force separator tooling for the separator tests: all minimal and all
// important S-T separators of size <= k by direct enumeration.
std::vector<VertexSet> brute_force_minimal_separators(const Graph& g, const VertexSet& s_set,
                                                      const VertexSet& t_set);
std::vector<VertexSet> brute_force_important_separators(const Graph& g, const VertexSet& s_set,
                                                        const VertexSet& t_set, int k);

// Brute-force minimum multiway cut size; nullopt when none exists.
std::optional<int> brute_force_min_multiway_cut(const Graph& g, const VertexSet& w_set);

}  // namespace vmc
