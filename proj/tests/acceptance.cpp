// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Self-checks (region structure, measure progress) stay enabled
// throughout; any internal assertion fails the criterion that tripped it.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "vmc/driver.hpp"
#include "vmc/errors.hpp"
#include "vmc/io.hpp"
#include "vmc/lp.hpp"
#include "vmc/prng.hpp"
#include "vmc/separators.hpp"
#include "vmc/shadow.hpp"
#include "vmc/testkit.hpp"

using namespace vmc;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("criterion %2d [%s] %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

VertexSet single(int cap, int v) { return VertexSet::single(cap, v); }

// ---------------------------------------------------------------- criterion 1
void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  const double probs[3] = {0.15, 0.3, 0.5};
  int agree = 0, total = 500;
  for (uint64_t seed = 1; seed <= 500; ++seed) {
    int n = 6 + int(seed % 7);  // 6..12
    MulticutInstance inst = gen_random_instance(seed * 97 + 31, n, probs[seed % 3],
                                                1 + int(seed % 4), int(seed % 4));
    SolverResult fast = solve_vmc(inst);
    SolverResult slow = brute_force_vmc(inst);
    bool ok = fast.yes == slow.yes;
    if (ok && fast.yes)
      ok = is_multicut(inst.graph, inst.pairs, fast.witness->vertices) &&
           int(fast.witness->vertices.count()) <= inst.k;
    if (ok) ++agree;
  }
  double secs = seconds_since(t0);
  std::ostringstream os;
  os << "end-to-end oracle equivalence: " << agree << "/" << total << " agree, " << secs
     << "s (budget 600s)";
  report(1, agree == total && secs <= 600.0, os.str());
}

// ---------------------------------------------------------------- criterion 2
void criterion_2() {
  int agree = 0, total = 500;
  for (uint64_t seed = 1; seed <= 500; ++seed) {
    int n = 5 + int(seed % 6);  // 5..10
    double p = (seed % 2) ? 0.25 : 0.4;
    CompressionInstance inst =
        gen_random_compression(seed * 131 + 17, n, p, 1 + int(seed % 3), int(seed % 4));
    CompressionOracle oracle = brute_force_compression(inst);
    SolverResult r = solve_compression(inst);
    bool ok = r.yes == oracle.result.yes;
    if (ok && r.yes) ok = is_compression_solution(inst, r.witness->vertices);
    if (ok) ++agree;
  }
  std::ostringstream os;
  os << "compression-pipeline equivalence: " << agree << "/" << total << " agree";
  report(2, agree == total, os.str());
}

// ---------------------------------------------------------------- criterion 3
void criterion_3() {
  int good = 0, total = 300;
  long worst_count = 0;
  bool bound_ok = true;
  for (uint64_t seed = 1; seed <= 300; ++seed) {
    int n = 5 + int(seed % 6);  // 5..10
    MulticutInstance mi = gen_random_instance(seed * 57 + 5, n, 0.3, 0, 0);
    const Graph& g = mi.graph;
    int k = int(seed % 4);
    SplitMix64 rng(seed);
    VertexSet s(n), t(n);
    s.set(int(rng.below(uint64_t(n))));
    int tv;
    do {
      tv = int(rng.below(uint64_t(n)));
    } while (s.test(tv));
    t.set(tv);
    if (rng.bernoulli(1, 3)) {
      int extra = int(rng.below(uint64_t(n)));
      if (!s.test(extra) && !t.test(extra)) t.set(extra);
    }

    auto fast = enumerate_important_separators(g, s, t, k);
    auto slow = brute_force_important_separators(g, s, t, k);
    std::vector<VertexSet> fast_cuts;
    for (const auto& sep : fast) fast_cuts.push_back(sep.cut);
    bool ok = fast_cuts == slow;
    if (double(fast.size()) > std::pow(4.0, k)) bound_ok = false;
    worst_count = std::max(worst_count, long(fast.size()));
    if (ok) ++good;
  }
  std::ostringstream os;
  os << "important-separator completeness: " << good << "/" << total
     << " equal to brute force, counts <= 4^k " << (bound_ok ? "held" : "violated")
     << " (max " << worst_count << ")";
  report(3, good == total && bound_ok, os.str());
}

// ---------------------------------------------------------------- criterion 4
void criterion_4() {
  int good = 0, total = 200;
  uint64_t seed = 0;
  for (int done = 0; done < total; ++seed) {
    int n = 5 + int(seed % 6);
    MulticutInstance mi = gen_random_instance(seed * 211 + 3, n, 0.3, 0, 0);
    const Graph& g = mi.graph;
    int k = 1 + int(seed % 3);
    SplitMix64 rng(seed + 77);
    VertexSet s(n), t(n);
    s.set(int(rng.below(uint64_t(n))));
    int tv;
    do {
      tv = int(rng.below(uint64_t(n)));
    } while (s.test(tv));
    t.set(tv);

    auto family = enumerate_important_separators(g, s, t, k);
    bool has_empty = false;
    for (const auto& sep : family)
      if (sep.cut.empty()) has_empty = true;
    if (has_empty) continue;  // the empty separator cannot be hit by any H

    // random Y below the precondition: no family member fully inside it
    VertexSet y(n);
    (g.vertices() - s - t).for_each([&](int v) {
      if (rng.bernoulli(1, 4)) y.set(v);
    });
    bool violates = false;
    for (const auto& sep : family)
      if (sep.cut.is_subset_of(y)) violates = true;
    if (violates) y = VertexSet(n);

    ++done;
    try {
      VertexSet h = hitting_set_for_important_separators(g, s, t, k, y);
      bool ok = h.count() <= k && !h.intersects(y);
      for (const auto& sep : family)
        if (!h.intersects(sep.cut)) ok = false;
      if (ok) ++good;
    } catch (const PreconditionError&) {
      // precondition was checked above; reaching this is a failure
    }
  }
  std::ostringstream os;
  os << "hitting-set lemma: " << good << "/" << total
     << " with |H| <= k, H disjoint from Y, every important separator hit";
  report(4, good == total, os.str());
}

// ---------------------------------------------------------------- criterion 5
void criterion_5() {
  int covered = 0, total = 100;
  bool size_ok = true;
  for (uint64_t seed = 1; seed <= uint64_t(total); ++seed) {
    int k = 1 + int(seed % 3);
    int n = 8 + int(seed % 5);
    auto planted = plant_shadow_removable(seed * 307 + 11, n, k);
    const Graph& g = planted.graph;
    CoverFamily fam = deterministic_cover_family(g, planted.w_set, k);

    int r = k + k * k, l = r * r;
    SplitterFamily splitter = build_splitter(g.capacity(), r, l);
    double patterns = 1;  // C(l, k)
    for (int i = 0; i < k; ++i) patterns = patterns * double(l - i) / double(i + 1);
    if (double(fam.sets.size()) > double(splitter.fns.size()) * patterns) size_ok = false;

    VertexSet sh = shadow(g, planted.w_set, planted.y);
    for (const VertexSet& z : fam.sets)
      if (!z.intersects(planted.y) && sh.is_subset_of(z)) {
        ++covered;
        break;
      }
  }
  std::ostringstream os;
  os << "deterministic covering: " << covered << "/" << total
     << " planted sets covered, family sizes within the splitter*patterns bound: "
     << (size_ok ? "yes" : "no");
  report(5, covered == total && size_ok, os.str());
}

// ---------------------------------------------------------------- criterion 6
void criterion_6() {
  const double p_bound = 81.0 / 4096.0;  // p^k (1-p)^(k^2), p = 1/4, k = 2
  const long trials = 5000;
  const double sigma = std::sqrt(p_bound * (1.0 - p_bound) / double(trials));
  const double floor_rate = p_bound - 3.0 * sigma;
  int good = 0, total = 5;
  std::ostringstream rates;
  for (uint64_t seed = 1; seed <= uint64_t(total); ++seed) {
    auto planted = plant_shadow_removable(seed * 401 + 23, 9 + int(seed % 3), 2);
    const Graph& g = planted.graph;
    ImportantSeparatorIndex idx = build_separator_index(g, planted.w_set, 2);
    VertexSet sh = shadow(g, planted.w_set, planted.y);
    VertexSet interior = g.vertices() - planted.w_set;
    long hits = 0;
    for (long t = 0; t < trials; ++t) {
      SplitMix64 rng(mix_seed(seed * 5077, uint64_t(t)));
      Coloring c{VertexSet(g.capacity())};
      interior.for_each([&](int v) {
        if (rng.bernoulli(1, 4)) c.red.set(v);
      });
      VertexSet z = covering_with_index(g, planted.w_set, idx, c);
      if (!z.intersects(planted.y) && sh.is_subset_of(z)) ++hits;
    }
    double freq = double(hits) / double(trials);
    rates << " " << freq;
    if (freq >= floor_rate) ++good;
  }
  std::ostringstream os;
  os << "randomized covering rate: " << good << "/" << total << " instances at >= "
     << floor_rate << " (P=" << p_bound << " - 3 sigma); rates:" << rates.str();
  report(6, good == total, os.str());
}

// ---------------------------------------------------------------- criterion 7
void criterion_7() {
  int good = 0, total = 200;
  for (uint64_t seed = 1; seed <= uint64_t(total); ++seed) {
    int n = 5 + int(seed % 8);  // 5..12
    MulticutInstance mi = gen_random_instance(seed * 17 + 5, n, 0.3, 0, 0);
    const Graph& g = mi.graph;
    int wsize = 2 + int(seed % 3);  // 2..4
    VertexSet w(n);
    SplitMix64 rng(seed);
    while (w.count() < wsize) w.set(int(rng.below(uint64_t(n))));

    auto [value, sol] = opt_lp(g, w);
    auto brute_cut = brute_force_min_multiway_cut(g, w);
    bool ok;
    if (value.infinite) {
      ok = !brute_cut.has_value();
    } else {
      ok = brute_cut.has_value();
      // half-integrality
      ok = ok && is_integral(Rational(2) * value.value);
      Rational sum(0);
      for (const Rational& r : sol->half_integral) {
        if (!is_half_integral_value(r)) ok = false;
        sum += r;
      }
      ok = ok && sum == value.value;
      // lower bound on the integral optimum
      if (brute_cut) ok = ok && value.value <= Rational(*brute_cut);
      // non-zero torso growth, or the mincut identity when no non-zero vertex
      auto nz = find_nonzero_vertex(g, w);
      if (nz) {
        Graph tg = g.torso(single(n, *nz));
        LpCore probe = opt_lp_core(tg, w);
        if (!probe.objective.infinite)
          ok = ok && probe.objective.value >= value.value + Rational(1, 2);
      } else {
        ok = ok && check_lemma_2lp_eq_mincut(g, w);
      }
    }
    if (ok) ++good;
  }
  std::ostringstream os;
  os << "lp properties: " << good << "/" << total
     << " (half-integrality, cut lower bound, torso growth, 2LP = mincut sum)";
  report(7, good == total, os.str());
}

// ------------------------------------------------------------- criteria 8 & 9
void criteria_8_and_9() {
  int bipedal_ok = 0, total = 300;
  bool depth_ok = true, fanout_ok = true, checks_ok = true, fanout_8k_ok = true;
  long worst_children = 0, worst_limit = 0;
  int worst_depth = -1, worst_depth_cap = 0;
  for (uint64_t seed = 1; seed <= uint64_t(total); ++seed) {
    int n = 5 + int(seed % 6);
    CompressionInstance inst =
        gen_random_compression(seed * 83 + 29, n, (seed % 2) ? 0.3 : 0.45, 1 + int(seed % 3),
                               1 + int(seed % 3));
    SolveStats stats;
    PipelineContext ctx;
    ctx.stats = &stats;
    bool all_bipedal = true;
    try {
      for (const auto& bo : make_bipedal(inst, &ctx))
        if (!is_bipedal(bo.inst.graph, bo.inst.w_set)) all_bipedal = false;
    } catch (const InternalError&) {
      checks_ok = false;  // a structural self-check fired (criterion 9)
      all_bipedal = false;
    }
    if (all_bipedal) ++bipedal_ok;
    if (stats.depth > 4 * inst.k + 2) {
      depth_ok = false;
      if (stats.depth > worst_depth) {
        worst_depth = stats.depth;
        worst_depth_cap = 4 * inst.k + 2;
      }
    }
    if (!stats.rule2_within_limit) {
      fanout_ok = false;
      if (stats.worst_rule2_children > worst_children) {
        worst_children = stats.worst_rule2_children;
        worst_limit = stats.worst_rule2_limit;
      }
    }
    if (stats.worst_rule2_children > 8L * inst.k) fanout_8k_ok = false;
  }
  {
    std::ostringstream os;
    os << "bipedal output: " << bipedal_ok << "/" << total << " all-bipedal, depth <= 4k+2 "
       << (depth_ok ? "held" : "violated");
    if (worst_depth >= 0) os << " (saw " << worst_depth << " vs " << worst_depth_cap << ")";
    os << ", rule-2 fan-out <= 2k^2 " << (fanout_ok ? "held" : "violated");
    if (!fanout_ok)
      os << " (saw " << worst_children << " vs " << worst_limit
         << "; the provable 8k bound " << (fanout_8k_ok ? "held" : "also failed")
         << " -- with |W| = k+1 the 2k^2 constant is not achievable)";
    report(8, bipedal_ok == total && depth_ok && fanout_ok, os.str());
  }
  {
    std::ostringstream os;
    os << "region structure: trichotomy and FC-boundary disjointness self-checks "
       << (checks_ok ? "fired zero violations across the corpus" : "reported a violation");
    report(9, checks_ok, os.str());
  }
}

// --------------------------------------------------------------- criterion 10
struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli_full(const std::string& args) {
  CliRun r;
  std::string cmd = std::string(VMC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string run_cli(const std::string& args) { return run_cli_full(args).out; }

void cli_contract() {
  std::string dir = "/tmp/vmc_acceptance";
  std::system(("mkdir -p " + dir).c_str());
  std::string f = dir + "/cli.vmc";
  {
    std::ofstream out(f);
    out << "p vmc 3 2 1\ne 1 2\ne 2 3\nt 1 3\nk 1\n";
  }
  bool ok = true;
  CliRun yes = run_cli_full("solve " + f);
  ok = ok && yes.code == 0 && yes.out.find("witness") != std::string::npos;
  ok = ok && run_cli_full("solve " + f + " --k 0").code == 1;
  ok = ok && run_cli_full("verify " + f + " --witness 2").code == 0;
  ok = ok && run_cli_full("verify " + f + " --witness 1,3").code == 1;  // size over k
  std::string bad = dir + "/bad.vmc";
  {
    std::ofstream out(bad);
    out << "p vmc 3 1 0\ne 1 9\n";
  }
  ok = ok && run_cli_full("solve " + bad).code == 2;
  ok = ok && run_cli_full("oracle " + f).code == 0;
  std::printf("cli contract [%s] exit codes 0/1/2 and witness output behave as documented\n",
              ok ? "PASS" : "FAIL");
  if (!ok) ++failures;
}

void criterion_10() {
  std::string dir = "/tmp/vmc_acceptance";
  std::system(("mkdir -p " + dir).c_str());

  std::string gen = run_cli("gen --seed 7 --n 10 --p 0.3 --pairs 3 --k 2");
  std::string gen2 = run_cli("gen --seed 7 --n 10 --p 0.3 --pairs 3 --k 2");
  bool ok = !gen.empty() && gen == gen2;

  std::string f = dir + "/inst.vmc";
  {
    std::ofstream out(f);
    out << gen;
  }
  std::string s1 = run_cli("solve " + f + " --json --threads 1");
  std::string s2 = run_cli("solve " + f + " --json --threads 1");
  std::string s4 = run_cli("solve " + f + " --json --threads 4");
  ok = ok && !s1.empty() && s1 == s2 && s1 == s4;

  // a compression-style file for the randomized cover family
  CompressionInstance ci = gen_random_compression(99, 9, 0.3, 2, 2);
  std::string fc = dir + "/cover.vmc";
  {
    std::ofstream out(fc);
    out << serialize_instance(ci);
  }
  std::string c1 = run_cli("shadow-cover " + fc + " --k 2 --mode rand --seed 5 --trials 500 --threads 1");
  std::string c4 = run_cli("shadow-cover " + fc + " --k 2 --mode rand --seed 5 --trials 500 --threads 4");
  std::string d1 = run_cli("shadow-cover " + fc + " --k 2 --mode det --threads 1");
  std::string d4 = run_cli("shadow-cover " + fc + " --k 2 --mode det --threads 4");
  ok = ok && !c1.empty() && c1 == c4 && !d1.empty() && d1 == d4;

  report(10, ok,
         "reproducibility: identical seeds give byte-identical JSON and cover families "
         "across repeated runs and thread counts 1/4");
}

}  // namespace

int main() {
  runtime_checks() = true;
  auto t0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criteria_8_and_9();
  criterion_10();
  cli_contract();
  std::printf("acceptance: %s (%d failing), %.1fs total\n", failures == 0 ? "PASS" : "FAIL",
              failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
