#include <algorithm>
#include <set>

#include "doctest.h"
#include "vmc/bipedal_solver.hpp"
#include "vmc/driver.hpp"
#include "vmc/errors.hpp"
#include "vmc/prng.hpp"
#include "vmc/shadow.hpp"
#include "vmc/testkit.hpp"

using namespace vmc;

namespace {

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

VertexSet vs(int cap, std::initializer_list<int> ids) {
  VertexSet s(cap);
  for (int v : ids) s.set(v);
  return s;
}

}  // namespace

TEST_CASE("bipedal solvers on fixtures") {
  CompressionInstance p4{path_graph(4), {}, vs(4, {0, 3}), 1, false};
  SolverResult e = solve_bipedal_exact(p4);
  REQUIRE(e.yes);
  CHECK(is_compression_solution(p4, e.witness->vertices));
  SolverResult b = solve_bipedal_branching(p4);
  REQUIRE(b.yes);
  CHECK(is_compression_solution(p4, b.witness->vertices));

  CompressionInstance k0 = p4;
  k0.k = 0;
  CHECK(!solve_bipedal_exact(k0).yes);
  CHECK(!solve_bipedal_branching(k0).yes);

  Graph edge(2);
  edge.add_edge(0, 1);
  CompressionInstance we{edge, {}, vs(2, {0, 1}), 1, false};
  CHECK(!solve_bipedal_exact(we).yes);
  CHECK(!solve_bipedal_branching(we).yes);

  // no violated path: yes with the empty witness
  Graph split(4);
  split.add_edge(0, 2);
  split.add_edge(1, 3);
  CompressionInstance si{split, {}, vs(4, {0, 1}), 2, false};
  SolverResult se = solve_bipedal_branching(si);
  REQUIRE(se.yes);
  CHECK(se.witness->vertices.empty());

  // k = 0 with a violated path
  CompressionInstance sv{path_graph(3), {{0, 2}}, VertexSet(3), 0, false};
  CHECK(!solve_bipedal_branching(sv).yes);
}

TEST_CASE("bipedal solvers agree with brute force") {
  int bipedal_seen = 0;
  for (uint64_t seed = 1; seed <= 500; ++seed) {
    int n = 5 + int(seed % 10);  // up to 14
    CompressionInstance inst =
        gen_random_compression(seed * 37 + 6, n, 0.3, 1 + int(seed % 3), 1 + int(seed % 3));
    CompressionOracle oracle = brute_force_compression(inst);
    SolverResult e = solve_bipedal_exact(inst);
    SolverResult b = solve_bipedal_branching(inst);
    CHECK(e.yes == oracle.result.yes);
    CHECK(b.yes == oracle.result.yes);
    if (e.yes) CHECK(is_compression_solution(inst, e.witness->vertices));
    if (b.yes) CHECK(is_compression_solution(inst, b.witness->vertices));
    if (is_bipedal(inst.graph, inst.w_set)) ++bipedal_seen;
  }
  CHECK(bipedal_seen >= 100);
}

TEST_CASE("witness propagation") {
  Witness leaf{vs(5, {1})};
  CHECK(propagate_witness(leaf, {}).vertices == vs(5, {1}));

  std::vector<Edit> edits{{EditKind::DeleteVertex, 3, -1, {}}};
  CHECK(propagate_witness(Witness{VertexSet(5)}, edits).vertices == vs(5, {3}));

  std::vector<Edit> chain{{EditKind::Torso, 2, -1, {}},
                          {EditKind::DeleteVertex, 0, -1, {}},
                          {EditKind::Contract, 4, 1, {}}};
  CHECK(propagate_witness(leaf, chain).vertices == vs(5, {0, 1}));
}

TEST_CASE("solve_compression fixtures") {
  CompressionInstance p4{path_graph(4), {}, vs(4, {0, 3}), 1, false};
  SolverResult r = solve_compression(p4);
  REQUIRE(r.yes);
  CHECK(is_compression_solution(p4, r.witness->vertices));

  // k = 0 with W already separating everything
  Graph split(4);
  split.add_edge(0, 2);
  split.add_edge(1, 3);
  CompressionInstance si{split, {}, vs(4, {0, 1}), 0, false};
  SolverResult rs = solve_compression(si);
  REQUIRE(rs.yes);
  CHECK(rs.witness->vertices.empty());

  CompressionInstance no = p4;
  no.k = 0;
  CHECK(!solve_compression(no).yes);
}

TEST_CASE("solve_compression agrees with the oracle") {
  for (uint64_t seed = 1; seed <= 150; ++seed) {
    int n = 4 + int(seed % 5);  // up to 8 in the unit suite
    CompressionInstance inst =
        gen_random_compression(seed * 41 + 8, n, 0.35, 1 + int(seed % 3), int(seed % 4));
    CompressionOracle oracle = brute_force_compression(inst);
    SolveStats stats;
    SolverResult r = solve_compression(inst, &stats);
    CHECK(r.yes == oracle.result.yes);
    if (r.yes) CHECK(is_compression_solution(inst, r.witness->vertices));
  }
}

TEST_CASE("partition enumeration is exact and canonical") {
  // Partitions with a distinguished (possibly empty) first block: Bell(n+1).
  auto parts3 = enumerate_partitions({2, 5, 7});
  CHECK(parts3.size() == 15);
  auto parts4 = enumerate_partitions({1, 2, 3, 4});
  CHECK(parts4.size() == 52);

  std::set<std::string> seen;
  for (const auto& p : parts4) {
    std::string enc = "w1:";
    for (int v : p.w1) enc += std::to_string(v) + ",";
    std::vector<std::string> blocks;
    for (const auto& b : p.blocks) {
      std::string num;
      for (int v : b) num += std::to_string(v) + ",";
      blocks.push_back(num);
    }
    std::sort(blocks.begin(), blocks.end());
    for (const auto& b : blocks) enc += "|" + b;
    CHECK(seen.insert(enc).second);  // no duplicates under canonical encoding
    for (const auto& b : p.blocks) CHECK(!b.empty());
  }
}

TEST_CASE("solve_vmc fixtures") {
  MulticutInstance empty{path_graph(4), {}, 1};
  SolverResult re = solve_vmc(empty);
  REQUIRE(re.yes);
  CHECK(re.witness->vertices.empty());

  MulticutInstance p3{path_graph(3), {{0, 2}}, 1};
  SolverResult r3 = solve_vmc(p3);
  REQUIRE(r3.yes);
  CHECK(is_multicut(p3.graph, p3.pairs, r3.witness->vertices));
  CHECK(r3.witness->vertices.count() <= 1);

  Graph k4(4);
  std::vector<VertexPair> all;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      k4.add_edge(i, j);
      all.emplace_back(i, j);
    }
  CHECK(!solve_vmc(MulticutInstance{k4, all, 1}).yes);
}

TEST_CASE("solve_vmc agrees with brute force") {
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    int n = 4 + int(seed % 6);  // up to 9 in the unit suite
    MulticutInstance inst = gen_random_instance(seed * 53 + 12, n, 0.3, 1 + int(seed % 4),
                                                int(seed % 4));
    SolverResult fast = solve_vmc(inst);
    SolverResult slow = brute_force_vmc(inst);
    CHECK(fast.yes == slow.yes);
    if (fast.yes) {
      CHECK(is_multicut(inst.graph, inst.pairs, fast.witness->vertices));
      CHECK(int(fast.witness->vertices.count()) <= inst.k);
    }
  }
}

TEST_CASE("solve_vmc is monotone in k") {
  for (uint64_t seed = 1; seed <= 25; ++seed) {
    MulticutInstance inst = gen_random_instance(seed * 61 + 17, 7, 0.3, 3, 1);
    bool yes_k = solve_vmc(inst).yes;
    MulticutInstance bigger = inst;
    bigger.k = inst.k + 1;
    bool yes_k1 = solve_vmc(bigger).yes;
    if (yes_k) CHECK(yes_k1);
  }
}

TEST_CASE("insertion order does not change the verdict") {
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    MulticutInstance inst = gen_random_instance(seed * 71 + 19, 7, 0.35, 3, 2);
    SolverResult base = solve_vmc(inst);
    std::vector<int> order = inst.graph.vertices().to_vector();
    SplitMix64 rng(seed);
    for (size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    SolverResult perm = solve_vmc(inst, nullptr, &order);
    CHECK(base.yes == perm.yes);
  }
}

TEST_CASE("degenerate pairs with equal endpoints force deletion") {
  // A pair (s, s) can only be cut by deleting s.
  Graph g = path_graph(3);
  MulticutInstance inst{g, {{1, 1}}, 1};
  SolverResult r = solve_vmc(inst);
  REQUIRE(r.yes);
  CHECK(r.witness->vertices.test(1));
  CHECK(!solve_vmc(MulticutInstance{g, {{1, 1}}, 0}).yes);
  CHECK(solve_vmc(MulticutInstance{g, {{1, 1}, {0, 2}}, 1}).yes);  // one vertex does both
}

TEST_CASE("extended randomized stress against the oracle") {
  // A different parameter mix from the acceptance corpus: denser graphs,
  // more pairs, slack budgets.
  for (uint64_t seed = 1; seed <= 120; ++seed) {
    int n = 5 + int(seed % 7);
    double p = 0.2 + 0.15 * double(seed % 4);
    MulticutInstance inst =
        gen_random_instance(seed * 977 + 13, n, p, 2 + int(seed % 4), 1 + int(seed % 4));
    SolverResult fast = solve_vmc(inst);
    SolverResult slow = brute_force_vmc(inst);
    CHECK(fast.yes == slow.yes);
    if (fast.yes) {
      CHECK(is_multicut(inst.graph, inst.pairs, fast.witness->vertices));
      CHECK(int(fast.witness->vertices.count()) <= inst.k);
    }
  }
}
