// Compares the serial reference implementations of the parallel kernels
// against their OpenMP versions on seeded instances: cover-family generation
// (the hot inner map of the pipeline) and randomized covering trials.
// Verifies that both produce identical output before reporting timings.
#include <chrono>
#include <cstdio>
#include <string>
#include <thread>

#include "vmc/errors.hpp"
#include "vmc/prng.hpp"
#include "vmc/shadow.hpp"
#include "vmc/testkit.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace vmc;

namespace {

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

template <class F>
double time_ms(F f, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    double t0 = now_ms();
    f();
    double t1 = now_ms();
    best = std::min(best, t1 - t0);
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int threads = 4;
  if (argc > 1) threads = std::atoi(argv[1]);
#ifdef _OPENMP
  omp_set_num_threads(threads);
  std::printf("openmp enabled, %d threads on %u hardware core(s)\n", threads,
              std::thread::hardware_concurrency());
  if (std::thread::hardware_concurrency() <= 1)
    std::printf("note: single core visible; expect ~1.0x, the comparison still "
                "verifies serial/parallel output equality\n");
#else
  std::printf("built without openmp; both columns run serial\n");
#endif
  runtime_checks() = false;  // measure the kernels, not the self-checks

  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial ms", "parallel", "speedup");
  for (int k = 2; k <= 3; ++k) {
    for (uint64_t seed : {11ull, 23ull}) {
      auto planted = plant_shadow_removable(seed, 14, k);
      const Graph& g = planted.graph;
      const VertexSet& w = planted.w_set;

      CoverFamily ref = deterministic_cover_family_serial(g, w, k);
      CoverFamily par = deterministic_cover_family(g, w, k);
      check_internal(ref.sets == par.sets, "parallel cover family differs from serial");

      double ts = time_ms([&] { deterministic_cover_family_serial(g, w, k); }, 3);
      double tp = time_ms([&] { deterministic_cover_family(g, w, k); }, 3);
      std::string name = "det-cover k=" + std::to_string(k) + " seed=" + std::to_string(seed);
      std::printf("%-34s %10.2f %10.2f %7.2fx\n", name.c_str(), ts, tp, ts / tp);
    }
  }

  // The index build dominates once graphs grow: per-vertex important
  // separator enumeration over a shared read-only graph.
  for (int n : {32, 48}) {
    MulticutInstance mi = gen_random_instance(uint64_t(n) * 7919, n, 6.0 / n, 0, 0);
    VertexSet w(n);
    SplitMix64 rng{uint64_t(n)};
    while (w.count() < 4) w.set(int(rng.below(uint64_t(n))));
    const Graph& g = mi.graph;

    ImportantSeparatorIndex ref = build_separator_index(g, w, 3, false);
    ImportantSeparatorIndex par = build_separator_index(g, w, 3, true);
    check_internal(ref.cuts == par.cuts, "parallel separator index differs from serial");

    double ts = time_ms([&] { build_separator_index(g, w, 3, false); }, 3);
    double tp = time_ms([&] { build_separator_index(g, w, 3, true); }, 3);
    std::string name = "separator-index n=" + std::to_string(n) + " k=3";
    std::printf("%-34s %10.2f %10.2f %7.2fx\n", name.c_str(), ts, tp, ts / tp);
  }

  {
    auto planted = plant_shadow_removable(7, 14, 2);
    const Graph& g = planted.graph;
    const VertexSet& w = planted.w_set;
    long trials = default_randomized_trials(2);
#ifdef _OPENMP
    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    CoverFamily ref = randomized_cover_family(g, w, 2, trials, 99);
    double ts = time_ms([&] { randomized_cover_family(g, w, 2, trials, 99); }, 3);
#ifdef _OPENMP
    omp_set_num_threads(saved);
#endif
    CoverFamily par = randomized_cover_family(g, w, 2, trials, 99);
    check_internal(ref.sets == par.sets, "randomized family depends on thread count");
    double tp = time_ms([&] { randomized_cover_family(g, w, 2, trials, 99); }, 3);
    std::string name = "rand-cover k=2 trials=" + std::to_string(trials);
    std::printf("%-34s %10.2f %10.2f %7.2fx\n", name.c_str(), ts, tp, ts / tp);
  }
  return 0;
}
