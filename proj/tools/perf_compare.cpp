// Benchmark comparing the serial reference execution of the data-parallel
// kernels against their OpenMP counterparts. Also asserts that both paths
// produce identical results, which the reproducibility contract requires.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperim/baselines.hpp"
#include "hyperim/cascade.hpp"
#include "hyperim/generators.hpp"
#include "hyperim/hypergraph.hpp"
#include "hyperim/parallel.hpp"
#include "hyperim/swarm.hpp"

using namespace hyperim;

namespace {

double elapsed_ms(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

int mismatches = 0;

template <class Fn>
void compare(const char* kernel, Fn&& fn) {
  const auto t_serial = std::chrono::steady_clock::now();
  auto serial_out = fn(Execution::serial);
  const double serial_ms = elapsed_ms(t_serial);

  const auto t_parallel = std::chrono::steady_clock::now();
  auto parallel_out = fn(Execution::parallel);
  const double parallel_ms = elapsed_ms(t_parallel);

  const bool identical = serial_out == parallel_out;
  if (!identical) ++mismatches;
  std::printf("%-28s %10.2f ms %10.2f ms   x%-6.2f %s\n", kernel, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  std::uint32_t n = 2000, m = 1000, pop = 256, gens = 10, k = 25;
  double feature = 3.0;
  int threads = 0;
  bool smoke = false;

  CLI::App app{"serial vs OpenMP kernel comparison"};
  app.add_option("--n", n);
  app.add_option("--m", m);
  app.add_option("--feature", feature);
  app.add_option("--pop", pop);
  app.add_option("--gens", gens);
  app.add_option("--k", k);
  app.add_option("--threads", threads);
  app.add_flag("--smoke", smoke, "tiny sizes for CI");
  CLI11_PARSE(app, argc, argv);

  if (smoke) {
    n = 200;
    m = 120;
    pop = 32;
    gens = 3;
    k = 5;
  }
  set_worker_count(threads);

  GeneratorSpec spec{Family::er, n, m, feature, 12345};
  const Hypergraph h = generate(spec).largest_connected_component();
  std::printf("graph: %s, component n=%u m=%u, workers=%d\n", spec.label().c_str(),
              h.node_count(), h.edge_count(), max_worker_count());
  std::printf("%-28s %13s %13s   %-7s\n", "kernel", "serial", "parallel", "speedup");

  if (k > h.node_count()) k = h.node_count();

  // batch two-layer fitness over a random population
  const auto positions = init_random(h.node_count(), k, pop * 8, 99);
  compare("population fitness", [&](Execution exec) {
    std::vector<std::uint32_t> totals;
    for (int rep = 0; rep < 6; ++rep) totals = evaluate_population(h, positions, 0.5, exec);
    return totals;
  });

  compare("summary stats (APSP)", [&](Execution exec) { return summary_stats(h, exec).to_csv_row(); });

  compare("pagerank scores", [&](Execution exec) {
    return pagerank_scores(h, 0.85, 100, exec);
  });

  compare("hdpso optimizer", [&](Execution exec) {
    OptimizerConfig cfg;
    cfg.k = k;
    cfg.population = pop;
    cfg.max_generations = gens;
    cfg.rng_master_seed = 7;
    const OptimizationResult result = run_optimizer(h, cfg, exec);
    return std::make_pair(result.seeds, result.fitness_history);
  });

  compare("ga optimizer", [&](Execution exec) {
    GaConfig cfg;
    cfg.k = k;
    cfg.population = pop;
    cfg.max_generations = gens;
    cfg.rng_master_seed = 7;
    const OptimizationResult result = run_ga(h, cfg, exec);
    return std::make_pair(result.seeds, result.fitness_history);
  });

  if (mismatches > 0) {
    std::printf("%d kernel(s) diverged between serial and parallel execution\n", mismatches);
    return 1;
  }
  return 0;
}
