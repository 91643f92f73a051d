// vmcut command line front end. Exit codes: 0 yes/ok, 1 no/invalid,
// 2 usage or parse error, 3 internal assertion failure.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vmc/driver.hpp"
#include "vmc/errors.hpp"
#include "vmc/io.hpp"
#include "vmc/lp.hpp"
#include "vmc/prng.hpp"
#include "vmc/separators.hpp"
#include "vmc/shadow.hpp"
#include "vmc/testkit.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using nlohmann::json;
using namespace vmc;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

ParsedInstance load_instance(const std::string& path) {
  if (path == "-") return parse_instance(std::cin);
  return parse_instance_file(path);
}

std::vector<int> parse_id_list(const std::string& csv, int n) {
  std::vector<int> out;
  std::string tok;
  std::istringstream ss(csv);
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int v = std::stoi(tok);
    if (v < 1 || v > n) throw ParseError("vertex id " + tok + " out of range");
    out.push_back(v - 1);
  }
  return out;
}

std::string id_list(const VertexSet& s) {
  std::string out;
  s.for_each([&](int v) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  });
  return out;
}

json witness_json(const std::optional<Witness>& w) {
  json arr = json::array();
  if (w)
    w->vertices.for_each([&](int v) { arr.push_back(v + 1); });
  return arr;
}

json result_json(const SolverResult& r, const SolveStats& stats, long wall_ms) {
  json j;
  j["verdict"] = r.yes ? "yes" : "no";
  j["witness"] = witness_json(r.witness);
  j["stats"] = {{"nodes", stats.nodes},
                {"lp_solves", stats.lp_solves},
                {"depth", stats.depth},
                {"wall_ms", wall_ms}};
  return j;
}

void print_result(const SolverResult& r, const SolveStats& stats, bool as_json, long wall_ms) {
  if (as_json) {
    std::cout << result_json(r, stats, wall_ms).dump() << '\n';
    return;
  }
  if (r.yes) {
    std::cout << "yes\n";
    std::cout << "witness " << id_list(r.witness->vertices) << '\n';
  } else {
    std::cout << "no\n";
  }
}

struct TimedSolve {
  SolverResult result;
  SolveStats stats;
  long wall_ms = 0;
};

template <class F>
TimedSolve timed(bool want_timing, F f) {
  TimedSolve t;
  auto start = std::chrono::steady_clock::now();
  t.result = f(&t.stats);
  auto stop = std::chrono::steady_clock::now();
  // wall_ms is reported as 0 unless explicitly requested: identical seeds
  // must give byte-identical output across runs and thread counts.
  if (want_timing)
    t.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return t;
}

int run(int argc, char** argv) {
  CLI::App app{"vmcut: exact vertex multicut solver"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for the parallel maps (default 1)");

  std::string file, source_csv, sink_csv, witness_csv, mode = "det", suite_dir, csv_out;
  int opt_k = -1;
  bool as_json = false, want_timing = false, dump_tree = false;
  uint64_t seed = 0;
  bool have_seed = false;
  long trials = -1;
  uint64_t order_seed = 0;
  bool have_order_seed = false;

  auto* solve = app.add_subcommand("solve", "solve a multicut instance");
  solve->add_option("file", file)->required();
  solve->add_option("--k", opt_k);
  solve->add_option("--mode", mode, "det|rand (rand requires --seed)");
  solve->add_option("--seed", seed)->each([&](const std::string&) { have_seed = true; });
  solve->add_flag("--json", as_json);
  solve->add_flag("--timing", want_timing, "report real wall_ms in --json output");
  solve->add_option("--order-seed", order_seed, "permute the insertion order")
      ->each([&](const std::string&) { have_order_seed = true; });

  auto* compress = app.add_subcommand("compress", "solve a compression instance");
  compress->add_option("file", file)->required();
  compress->add_option("--k", opt_k);
  compress->add_flag("--json", as_json);
  compress->add_flag("--timing", want_timing);

  auto* impsep = app.add_subcommand("impsep", "enumerate important separators");
  impsep->add_option("file", file)->required();
  impsep->add_option("--source", source_csv)->required();
  impsep->add_option("--sink", sink_csv)->required();
  impsep->add_option("--k", opt_k)->required();

  auto* lp = app.add_subcommand("lp", "multiway-cut LP optimum and assignment");
  lp->add_option("file", file)->required();

  auto* cover = app.add_subcommand("shadow-cover", "emit a shadow cover family");
  cover->add_option("file", file)->required();
  cover->add_option("--k", opt_k)->required();
  cover->add_option("--mode", mode, "det|rand");
  cover->add_option("--seed", seed)->each([&](const std::string&) { have_seed = true; });
  cover->add_option("--trials", trials);

  auto* branch_cmd = app.add_subcommand("branch", "run the branching stage");
  branch_cmd->add_option("file", file)->required();
  branch_cmd->add_option("--k", opt_k);
  branch_cmd->add_flag("--dump-tree", dump_tree, "emit the recursion tree as JSON lines");

  auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
  int gen_n = 8, gen_pairs = 2, gen_k = 2;
  double gen_p = 0.3;
  gen->add_option("--seed", seed)->required();
  gen->add_option("--n", gen_n);
  gen->add_option("--p", gen_p);
  gen->add_option("--pairs", gen_pairs);
  gen->add_option("--k", gen_k);

  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
  oracle->add_option("file", file)->required();
  oracle->add_option("--k", opt_k);
  oracle->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "check a witness");
  verify->add_option("file", file)->required();
  verify->add_option("--witness", witness_csv)->required();
  verify->add_option("--k", opt_k);

  auto* bench = app.add_subcommand("bench", "run a suite directory, write CSV");
  bench->add_option("--suite", suite_dir)->required();
  bench->add_option("--csv", csv_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

#ifdef _OPENMP
  omp_set_num_threads(std::max(1, threads));
#else
  (void)threads;
#endif

  auto k_of = [&]() -> std::optional<int> {
    return opt_k >= 0 ? std::optional<int>(opt_k) : std::nullopt;
  };

  if (solve->parsed()) {
    ParsedInstance p = load_instance(file);
    if (p.w_set.any()) std::cerr << "note: 'w' lines are ignored by solve; use compress\n";
    if (mode != "det" && mode != "rand") throw ParseError("--mode must be det or rand");
    if (mode == "rand" && !have_seed) throw ParseError("--mode rand requires --seed");
    MulticutInstance inst = p.to_multicut(k_of());
    std::vector<int> order = inst.graph.vertices().to_vector();
    if (have_order_seed) {
      SplitMix64 rng(order_seed);
      for (size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);
    }
    SolveOptions opts;
    if (mode == "rand") {
      opts.mode = CoverMode::Randomized;
      opts.seed = seed;
    }
    TimedSolve t = timed(want_timing, [&](SolveStats* stats) {
      return solve_vmc(inst, stats, have_order_seed ? &order : nullptr, opts);
    });
    print_result(t.result, t.stats, as_json, t.wall_ms);
    return t.result.yes ? kExitYes : kExitNo;
  }

  if (compress->parsed()) {
    ParsedInstance p = load_instance(file);
    CompressionInstance inst = p.to_compression(k_of());
    TimedSolve t =
        timed(want_timing, [&](SolveStats* stats) { return solve_compression(inst, stats); });
    print_result(t.result, t.stats, as_json, t.wall_ms);
    return t.result.yes ? kExitYes : kExitNo;
  }

  if (impsep->parsed()) {
    ParsedInstance p = load_instance(file);
    int n = p.graph.capacity();
    VertexSet s(n), t(n);
    for (int v : parse_id_list(source_csv, n)) s.set(v);
    for (int v : parse_id_list(sink_csv, n)) t.set(v);
    for (const Separator& sep : enumerate_important_separators(p.graph, s, t, opt_k))
      std::cout << id_list(sep.cut) << '\n';
    return kExitYes;
  }

  if (lp->parsed()) {
    ParsedInstance p = load_instance(file);
    auto [value, sol] = opt_lp(p.graph, p.w_set);
    if (value.infinite) {
      std::cout << "objective inf\n";
      return kExitYes;
    }
    std::cout << "objective " << rational_to_string(value.value) << '\n';
    (p.graph.vertices() - p.w_set).for_each([&](int v) {
      std::cout << v + 1 << ' ' << rational_to_string(sol->half_integral[v]) << '\n';
    });
    return kExitYes;
  }

  if (cover->parsed()) {
    ParsedInstance p = load_instance(file);
    if (mode != "det" && mode != "rand") throw ParseError("--mode must be det or rand");
    if (mode == "rand" && !have_seed) throw ParseError("--mode rand requires --seed");
    CoverFamily fam = mode == "det"
                          ? deterministic_cover_family(p.graph, p.w_set, opt_k)
                          : randomized_cover_family(p.graph, p.w_set, opt_k, trials, seed);
    for (const VertexSet& z : fam.sets) std::cout << id_list(z) << '\n';
    return kExitYes;
  }

  if (branch_cmd->parsed()) {
    ParsedInstance p = load_instance(file);
    CompressionInstance inst = p.to_compression(k_of());
    if (dump_tree) {
      TreeSink sink = [](const TreeNode& node) {
        json j;
        j["id"] = node.id;
        j["parent"] = node.parent;
        j["edit"] = node.edit;
        j["measure"] = node.measure;
        j["pruned"] = node.pruned;
        j["emitted"] = node.emitted;
        std::cout << j.dump() << '\n';
      };
      branching(inst, nullptr, &sink);
    } else {
      auto outs = branching(inst);
      for (const auto& bo : outs)
        std::cout << "instance n=" << bo.inst.graph.vertex_count()
                  << " m=" << bo.inst.graph.edge_count() << " pairs=" << bo.inst.pairs.size()
                  << " k=" << bo.inst.k << (bo.inst.infeasible ? " infeasible" : "") << '\n';
      std::cout << "total " << outs.size() << '\n';
    }
    return kExitYes;
  }

  if (gen->parsed()) {
    MulticutInstance inst = gen_random_instance(seed, gen_n, gen_p, gen_pairs, gen_k);
    std::cout << serialize_instance(inst);
    return kExitYes;
  }

  if (oracle->parsed()) {
    ParsedInstance p = load_instance(file);
    SolveStats stats;
    SolverResult r;
    if (p.w_set.any()) {
      CompressionOracle co = brute_force_compression(p.to_compression(k_of()));
      r = co.result;
      if (!as_json && r.yes)
        std::cout << "shadowless " << (co.shadowless_exists ? "yes" : "no") << '\n';
    } else {
      r = brute_force_vmc(p.to_multicut(k_of()));
    }
    print_result(r, stats, as_json, 0);
    return r.yes ? kExitYes : kExitNo;
  }

  if (verify->parsed()) {
    ParsedInstance p = load_instance(file);
    int n = p.graph.capacity();
    VertexSet x(n);
    for (int v : parse_id_list(witness_csv, n)) x.set(v);
    bool ok;
    if (p.w_set.any()) {
      ok = is_compression_solution(p.to_compression(k_of()), x);
    } else {
      MulticutInstance inst = p.to_multicut(k_of());
      ok = int(x.count()) <= inst.k && is_multicut(inst.graph, inst.pairs, x);
    }
    std::cout << (ok ? "valid" : "invalid") << '\n';
    return ok ? kExitYes : kExitNo;
  }

  if (bench->parsed()) {
    std::ofstream csv(csv_out);
    if (!csv) throw ParseError("cannot open '" + csv_out + "' for writing");
    csv << "instance,n,m,k,verdict,nodes,lp_solves,wall_ms\n";
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(suite_dir))
      if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
      ParsedInstance p = parse_instance_file(path.string());
      MulticutInstance inst = p.to_multicut(std::nullopt);
      TimedSolve t =
          timed(true, [&](SolveStats* stats) { return solve_vmc(inst, stats, nullptr); });
      csv << path.filename().string() << ',' << inst.graph.vertex_count() << ','
          << inst.graph.edge_count() << ',' << inst.k << ',' << (t.result.yes ? "yes" : "no")
          << ',' << t.stats.nodes << ',' << t.stats.lp_solves << ',' << t.wall_ms << '\n';
    }
    return kExitYes;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
