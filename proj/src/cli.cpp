#include "hyperim/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperim/bench.hpp"
#include "hyperim/cascade.hpp"
#include "hyperim/generators.hpp"
#include "hyperim/hypergraph.hpp"
#include "hyperim/parallel.hpp"

namespace hyperim {

namespace {

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> parts;
  std::stringstream stream(list);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

struct RunOptions {
  std::string graph_path;
  std::string gen_family;
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  double feature = 0.0;
  std::string algo_list = "hdpso";
  std::string k_list;
  double p = 0.5;
  std::uint32_t runs = 30;
  std::uint64_t seed = 0;
  std::uint32_t pop = 256;
  std::uint32_t gens = 50;
  double c1 = 1.2;
  double c2 = 1.2;
  double w = 0.7;
  double tau = 1.5;
  double pl = 0.1;
  std::string out = "experiment";
  std::string ref = "hdpso";
  int threads = 0;
  bool timing = false;
};

int do_run(const RunOptions& opt) {
  set_worker_count(opt.threads);

  ExperimentPlan plan;
  if (!opt.graph_path.empty()) {
    plan.graph_path = opt.graph_path;
    plan.graph_id = std::filesystem::path(opt.graph_path).stem().string();
  } else {
    GeneratorSpec spec;
    spec.family = family_from_string(opt.gen_family);
    spec.n = opt.n;
    spec.m = opt.m;
    spec.feature = opt.feature;
    spec.rng_seed = opt.seed;
    plan.generator = spec;
    plan.graph_id = spec.label();
  }
  plan.algorithms = split_list(opt.algo_list);
  for (const std::string& k_text : split_list(opt.k_list)) {
    plan.seed_sizes.push_back(static_cast<std::uint32_t>(std::stoul(k_text)));
  }
  plan.threshold = opt.p;
  plan.runs = opt.runs;
  plan.master_seed = opt.seed;
  plan.reference = opt.ref;
  plan.record_timing = opt.timing;
  plan.optimizer.max_generations = opt.gens;
  plan.optimizer.population = opt.pop;
  plan.optimizer.c1 = opt.c1;
  plan.optimizer.c2 = opt.c2;
  plan.optimizer.omega = opt.w;
  plan.optimizer.tau = opt.tau;
  plan.optimizer.local_fraction = opt.pl;
  plan.optimizer.rng_master_seed = opt.seed;

  const ExperimentReport report = run_experiment(plan);
  write_report_csv(report, opt.out);
  std::cout << format_report_summary(report);
  std::cout << "wrote " << opt.out << ".runs.csv and " << opt.out << ".summary.csv\n";
  return 0;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv) {
  CLI::App app{"hyperim: influential-seed selection on hypergraphs under threshold propagation"};
  app.require_subcommand(1);

  // ---- run ----
  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "run a multi-algorithm experiment and write CSV reports");
  auto* graph_opt = run->add_option("--graph", run_opt.graph_path, "hyperedge-list file");
  auto* gen_opt = run->add_option("--gen", run_opt.gen_family, "synthetic family: er|sf|kuf");
  graph_opt->excludes(gen_opt);
  run->add_option("--n", run_opt.n, "synthetic node count");
  run->add_option("--m", run_opt.m, "synthetic hyperedge count");
  run->add_option("--feature", run_opt.feature,
                  "family feature: ER mean edge size | SF exponent | KUF edge size");
  run->add_option("--algo", run_opt.algo_list,
                  "comma-separated algorithms: hdpso|pso|pso-init|ga|hhd|random|np|pagerank|hci1|hci2")
      ->check([](const std::string& list) -> std::string {
        for (const std::string& name : split_list(list)) {
          if (!is_known_algorithm(name)) return "unknown algorithm: " + name;
        }
        return {};
      });
  run->add_option("--k", run_opt.k_list, "comma-separated seed set sizes")
      ->required()
      ->check([](const std::string& list) -> std::string {
        const auto parts = split_list(list);
        if (parts.empty()) return std::string("empty seed size list");
        for (const std::string& item : parts) {
          if (item.find_first_not_of("0123456789") != std::string::npos || item == "0") {
            return "bad seed set size: " + item;
          }
        }
        return {};
      });
  run->add_option("--p", run_opt.p, "activation threshold in (0,1]")
      ->check(CLI::Range(1e-12, 1.0));
  run->add_option("--runs", run_opt.runs, "runs per (algorithm, k) cell")->default_val(30);
  run->add_option("--seed", run_opt.seed, "master seed: the single source of randomness");
  run->add_option("--pop", run_opt.pop, "population size")->default_val(256);
  run->add_option("--gens", run_opt.gens, "generations")->default_val(50);
  run->add_option("--c1", run_opt.c1, "cognitive weight")->default_val(1.2);
  run->add_option("--c2", run_opt.c2, "social weight")->default_val(1.2);
  run->add_option("--w", run_opt.w, "inertia weight")->default_val(0.7);
  run->add_option("--tau", run_opt.tau, "replacement threshold")->default_val(1.5);
  run->add_option("--pl", run_opt.pl, "local search fraction")->default_val(0.1);
  run->add_option("--out", run_opt.out, "output path prefix")->default_val("experiment");
  run->add_option("--ref", run_opt.ref, "reference algorithm for significance marks")
      ->default_val("hdpso");
  run->add_option("--threads", run_opt.threads, "worker threads (0 = library default)");
  run->add_flag("--timing", run_opt.timing,
                "record wall-clock runtimes (makes output non-reproducible)");

  // ---- gen ----
  std::string gen_family;
  GeneratorSpec gen_spec;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a synthetic hypergraph file");
  gen->add_option("--family", gen_family, "er|sf|kuf")->required();
  gen->add_option("--n", gen_spec.n, "node count")->required();
  gen->add_option("--m", gen_spec.m, "hyperedge count")->required();
  gen->add_option("--feature", gen_spec.feature,
                  "ER mean edge size | SF exponent | KUF edge size")
      ->required();
  gen->add_option("--seed", gen_spec.rng_seed, "generator seed");
  gen->add_option("--out", gen_out, "output file")->required();

  // ---- stats ----
  std::string stats_graph;
  int stats_threads = 0;
  CLI::App* stats = app.add_subcommand(
      "stats", "topological statistics of a hypergraph's largest connected component");
  stats->add_option("--graph", stats_graph, "hyperedge-list file")->required();
  stats->add_option("--threads", stats_threads, "worker threads (0 = library default)");

  // ---- cascade ----
  std::string cascade_graph;
  std::string cascade_seeds;
  double cascade_p = 0.5;
  bool cascade_trace = false;
  CLI::App* cascade = app.add_subcommand("cascade", "run one threshold cascade");
  cascade->add_option("--graph", cascade_graph, "hyperedge-list file")->required();
  cascade->add_option("--seeds", cascade_seeds, "comma-separated seed node ids (original ids)")
      ->required();
  cascade->add_option("--p", cascade_p, "activation threshold in (0,1]")
      ->check(CLI::Range(1e-12, 1.0));
  cascade->add_flag("--trace", cascade_trace, "print the per-round activation trace as CSV");

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (run->parsed()) {
      if (run_opt.graph_path.empty() && run_opt.gen_family.empty()) {
        std::cerr << "run: either --graph or --gen is required\n";
        return 2;
      }
      return do_run(run_opt);
    }
    if (gen->parsed()) {
      gen_spec.family = family_from_string(gen_family);
      const Hypergraph h = generate(gen_spec);
      serialize_hyperedge_file(h, gen_out, gen_spec.provenance());
      std::cout << "wrote " << gen_out << " (n=" << h.node_count() << ", m=" << h.edge_count()
                << ")\n";
      return 0;
    }
    if (stats->parsed()) {
      set_worker_count(stats_threads);
      const Hypergraph h = parse_hyperedge_file(stats_graph).largest_connected_component();
      const StatsReport report = summary_stats(h);
      std::cout << StatsReport::csv_header() << "\n" << report.to_csv_row() << "\n";
      return 0;
    }
    if (cascade->parsed()) {
      const Hypergraph h = parse_hyperedge_file(cascade_graph);
      std::vector<NodeId> seeds;
      for (const std::string& token : split_list(cascade_seeds)) {
        seeds.push_back(h.to_compact(std::stoull(token)));
      }
      const CascadeResult result = simulate_threshold(h, seeds, cascade_p);
      std::cout << "spread=" << result.activated_nodes.size() << "\n"
                << "rounds=" << (result.rounds.empty() ? 0 : result.rounds.size() - 1) << "\n";
      if (cascade_trace) {
        std::cout << "round,node\n";
        for (std::size_t round = 0; round < result.rounds.size(); ++round) {
          for (NodeId v : result.rounds[round]) {
            std::cout << round << ',' << h.original_id(v) << "\n";
          }
        }
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace hyperim
