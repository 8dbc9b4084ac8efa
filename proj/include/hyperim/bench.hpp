#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperim/generators.hpp"
#include "hyperim/hypergraph.hpp"
#include "hyperim/parallel.hpp"
#include "hyperim/swarm.hpp"

namespace hyperim {

// Two-sided Mann-Whitney rank-sum comparison of samples a and b. Uses exact
// null enumeration when the pooled sample has at most 12 tie-free values,
// otherwise the normal approximation with tie and continuity corrections.
// mark: '+' when mean(a) > mean(b) at significance alpha, '-' when
// mean(a) < mean(b) at significance alpha, '=' otherwise.
struct RankSumResult {
  double u_statistic = 0.0;  // U of sample a
  double p_value = 1.0;
  char mark = '=';
};
RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b,
                                double alpha = 0.05);

struct ExperimentPlan {
  std::string graph_path;                 // hyperedge-list file, or ...
  std::optional<GeneratorSpec> generator;  // ... a synthetic source
  std::string graph_id;                    // label used in reports
  std::vector<std::string> algorithms;     // hdpso|pso|pso-init|ga|hhd|random|np|pagerank|hci1|hci2
  std::vector<std::uint32_t> seed_sizes;
  double threshold = 0.5;
  std::uint32_t runs = 30;
  std::uint64_t master_seed = 0;
  std::string reference = "hdpso";
  double alpha = 0.05;
  OptimizerConfig optimizer;  // k/p/variant/seed overridden per cell
  double ga_crossover = 0.8;
  double ga_mutation = 0.1;
  bool record_timing = false;  // wall-clock timings break byte-reproducibility
};

struct RunRow {
  std::string algorithm;
  std::string graph_id;
  std::uint32_t k = 0;
  double p = 0.5;
  std::uint32_t run = 0;
  std::uint32_t exact_spread = 0;
  std::uint32_t approx_fitness = 0;
  double runtime_ms = 0.0;
};

struct SummaryRow {
  std::string algorithm;
  std::string graph_id;
  std::uint32_t k = 0;
  double mean = 0.0;
  double stddev = 0.0;
  char mark = '=';        // vs the reference algorithm
  double mean_rank = 0.0;  // rank of this algorithm's mean within the (graph, k) cell
};

struct AlgorithmRanks {
  std::string algorithm;
  double avg_mean_value = 0.0;
  double avg_best_value = 0.0;
  double avg_mean_rank = 0.0;
  double avg_best_rank = 0.0;
};

struct ExperimentReport {
  std::vector<RunRow> runs;
  std::vector<SummaryRow> summary;
  std::vector<AlgorithmRanks> ranks;
  std::string reference;
  double alpha = 0.05;
};

extern const std::vector<std::string> kKnownAlgorithms;
bool is_known_algorithm(const std::string& name);

// Executes every (algorithm, k) cell `runs` times with run-derived seeds.
// Deterministic given (plan, master_seed), independent of worker count.
ExperimentReport run_experiment(const ExperimentPlan& plan, Execution exec = Execution::parallel);

// Writes `<path>.runs.csv` and `<path>.summary.csv`.
void write_report_csv(const ExperimentReport& report, const std::string& path_prefix);

// Human-readable aggregate table (stdout companion to the CSV files).
std::string format_report_summary(const ExperimentReport& report);

}  // namespace hyperim
