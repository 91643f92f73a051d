#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vmc/instance.hpp"
#include "vmc/lp.hpp"
#include "vmc/rational.hpp"

namespace vmc {

enum class EditKind { DeleteVertex, Torso, Contract, BipedalContract };

// One instance transformation along a branch. Witness propagation replays
// these newest-first: deletions put the vertex back, everything else is
// identity (a solution of the transformed instance solves the original).
struct Edit {
  EditKind kind;
  int v = -1;  // DeleteVertex / Torso / Contract
  int w = -1;  // Contract target
  std::vector<std::pair<int, int>> mapping;  // BipedalContract

  std::string describe() const;
};

struct BranchOutput {
  CompressionInstance inst;
  std::vector<Edit> edits;  // root-to-output order
};

struct SolveStats {
  long nodes = 0;
  long lp_solves = 0;
  int depth = 0;
  // Largest Rule 2 fan-out seen, with the 2k^2 limit of the node it
  // occurred at (tracked for the acceptance suite).
  long worst_rule2_children = 0;
  long worst_rule2_limit = 0;
  bool rule2_within_limit = true;
};

// Shared state for one compression solve: counters plus a memo that collapses
// the branching tree to its instance DAG (identical sub-instances reached on
// different paths are expanded once; suffix edits stay valid under any
// prefix, since propagation only re-adds deleted vertices).
struct PipelineContext {
  SolveStats* stats = nullptr;
  std::unordered_map<std::string, std::vector<BranchOutput>> branch_memo;
  bool use_memo = true;

  void count_node(int depth) {
    if (!stats) return;
    ++stats->nodes;
    if (depth > stats->depth) stats->depth = depth;
  }
  long* lp_counter() { return stats ? &stats->lp_solves : nullptr; }
};

// Recursion-tree reporting for the CLI (JSON-lines dump).
struct TreeNode {
  long id;
  long parent;
  std::string edit;
  bool pruned;
  bool emitted;
  std::string measure;  // "p/q", "-inf" when the LP is infeasible
};
using TreeSink = std::function<void(const TreeNode&)>;

// Algorithm: prune when 2k - OPT_lp < 0; while a non-zero vertex exists,
// branch on torso vs delete; otherwise emit the instance and branch on
// contract vs delete for every FC-boundary vertex. Partial branching: every
// output of a no-instance is a no-instance.
std::vector<BranchOutput> branching(const CompressionInstance& inst,
                                    PipelineContext* ctx = nullptr,
                                    const TreeSink* sink = nullptr);

// Region decomposition by the farthest isolating min cuts.
struct Regions {
  std::vector<int> w_ids;        // ascending
  std::vector<VertexSet> fc;     // FC(w) per terminal, same order
  std::vector<VertexSet> parts;  // indexed by membership mask over w_ids
};
Regions regions(const Graph& g, const VertexSet& w_set);

bool is_contractible_solution(const CompressionInstance& inst, const VertexSet& x);

// Step 1: nonempty P(empty) means no shadowless contractible solution; return
// the trivial bipedal no-instance. Step 2: contract each region boundary
// B(P({w})) into w. The result is always bipedal.
CompressionInstance make_bipedal_one(const CompressionInstance& inst);

std::vector<BranchOutput> make_bipedal(const CompressionInstance& inst,
                                       PipelineContext* ctx = nullptr);

bool is_bipedal(const Graph& g, const VertexSet& w_set);

std::string measure_to_string(const LpValue& lp, int k);

}  // namespace vmc
