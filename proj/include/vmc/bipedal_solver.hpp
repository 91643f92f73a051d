#pragma once
#include <optional>

#include "vmc/instance.hpp"

namespace vmc {

struct SolverResult {
  bool yes = false;
  std::optional<Witness> witness;  // present and verified on yes
};

// Exact decision by subset enumeration in size-then-colex order; the witness
// is the canonical least solution. Decides plain solvability, which is
// strictly stronger than the bipedal-instance contract the pipeline needs.
SolverResult solve_bipedal_exact(const CompressionInstance& inst);

// Same verdict via a bounded search tree: pick a violated path (W-W first,
// then terminal pairs), branch on its non-W vertices, depth at most k.
SolverResult solve_bipedal_branching(const CompressionInstance& inst);

}  // namespace vmc
