#pragma once
#include <optional>
#include <vector>

#include "vmc/graph.hpp"
#include "vmc/rational.hpp"

namespace vmc {

// Optimum of the multiway-cut relaxation L_P(G, W): minimize the total weight
// over V\W subject to every W-W path carrying interior weight >= 1. Infinite
// when two terminals are joined with no interior vertex outside W.
struct LpValue {
  bool infinite = false;
  Rational value;

  static LpValue inf() { return {true, Rational(0)}; }
  static LpValue finite(Rational r) { return {false, std::move(r)}; }
};

struct LpSolution {
  Rational objective;
  std::vector<Rational> values;         // raw optimal assignment, indexed by vertex id
  std::vector<Rational> half_integral;  // optimal assignment over {0, 1/2, 1}
};

// Fast-path result: objective, raw assignment, and the generated clean-path
// constraints. The constraints of a graph remain valid inequalities after
// torso of a vertex (drop it from each support) and after vertex deletion
// (drop supports containing it), which makes them reusable warm starts.
struct LpCore {
  LpValue objective;
  std::vector<Rational> values;
  std::vector<VertexSet> constraints;
};

LpCore opt_lp_core(const Graph& g, const VertexSet& w_set,
                   const std::vector<VertexSet>* warm_constraints = nullptr,
                   long* solve_counter = nullptr);

// Full result including a half-integral optimal assignment. No solution when
// the LP is infeasible (adjacent terminals).
std::pair<LpValue, std::optional<LpSolution>> opt_lp(const Graph& g, const VertexSet& w_set);

// Combined scan used by the branching loop: one base LP solve plus one torso
// probe per support vertex of the raw optimum (vertices outside the support
// can never be non-zero, since the found optimum itself assigns them 0).
struct NonzeroScan {
  LpCore base;
  std::optional<int> vertex;  // lowest-id non-zero vertex
};
NonzeroScan scan_nonzero_vertex(const Graph& g, const VertexSet& w_set,
                                const std::vector<VertexSet>* warm_constraints = nullptr,
                                long* solve_counter = nullptr);

// True iff every optimal assignment gives v a strictly positive value,
// decided by comparing the optimum of the torso at v against the base
// optimum. Throws when v lies in W.
bool is_nonzero_vertex(const Graph& g, const VertexSet& w_set, int v);

std::optional<int> find_nonzero_vertex(const Graph& g, const VertexSet& w_set);

// With no non-zero vertex present, 2*OPT_lp must equal the sum over w in W of
// the minimum w-isolating cut sizes. Throws when the precondition fails.
bool check_lemma_2lp_eq_mincut(const Graph& g, const VertexSet& w_set);

}  // namespace vmc
