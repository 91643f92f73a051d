#pragma once
#include <optional>
#include <vector>

#include "vmc/bipedal_solver.hpp"
#include "vmc/branching.hpp"
#include "vmc/instance.hpp"
#include "vmc/shadow.hpp"

namespace vmc {

// Witness propagation: replay edits newest-first, re-adding deleted vertices;
// torso, contract and the bipedal contraction are identity. The result is
// verified against the instance the edits started from by the callers.
Witness propagate_witness(const Witness& leaf_witness, const std::vector<Edit>& edits);

// Cover-family selection for the pipeline. Deterministic mode is the default
// and the only mode with a completeness guarantee; randomized mode is for
// experiments and needs an explicit seed.
struct SolveOptions {
  CoverMode mode = CoverMode::Deterministic;
  uint64_t seed = 0;
};

// Full compression pipeline: shadow removal, then make_bipedal on every
// output, then the bipedal solver on every leaf. Yes iff some leaf is
// solvable; the witness is mapped back and verified.
SolverResult solve_compression(const CompressionInstance& inst, SolveStats* stats = nullptr,
                               const SolveOptions& opts = {});

// One block partition of the compression step: W1 is deleted, every other
// block is contracted onto its minimum element, which becomes a W vertex.
struct CompressionPartition {
  std::vector<int> w1;
  std::vector<std::vector<int>> blocks;  // each sorted, ordered by minimum
};

// Every partition of `elems` with a distinguished (possibly empty) first
// block, each exactly once, in canonical order.
std::vector<CompressionPartition> enumerate_partitions(const std::vector<int>& elems);

// Iterative compression over the vertex order (file order by default).
SolverResult solve_vmc(const MulticutInstance& inst, SolveStats* stats = nullptr,
                       const std::vector<int>* insertion_order = nullptr,
                       const SolveOptions& opts = {});

}  // namespace vmc
