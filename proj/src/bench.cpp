#include "hyperim/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hyperim/baselines.hpp"
#include "hyperim/cascade.hpp"

namespace hyperim {

namespace {

constexpr std::uint64_t kRunStream = 21;

double mean_of(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

// Midranks of the pooled sample, returned per element of (a then b).
std::vector<double> midranks(std::span<const double> a, std::span<const double> b) {
  const std::size_t total = a.size() + b.size();
  std::vector<std::pair<double, std::size_t>> pooled(total);
  for (std::size_t i = 0; i < a.size(); ++i) pooled[i] = {a[i], i};
  for (std::size_t j = 0; j < b.size(); ++j) pooled[a.size() + j] = {b[j], a.size() + j};
  std::sort(pooled.begin(), pooled.end());

  std::vector<double> ranks(total);
  std::size_t i = 0;
  while (i < total) {
    std::size_t j = i;
    while (j + 1 < total && pooled[j + 1].first == pooled[i].first) ++j;
    const double shared = 0.5 * static_cast<double>(i + j) + 1.0;  // average of ranks i+1..j+1
    for (std::size_t t = i; t <= j; ++t) ranks[pooled[t].second] = shared;
    i = j + 1;
  }
  return ranks;
}

bool has_ties(std::span<const double> a, std::span<const double> b) {
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::sort(pooled.begin(), pooled.end());
  return std::adjacent_find(pooled.begin(), pooled.end()) != pooled.end();
}

// Exact two-sided p-value by enumerating every assignment of pooled ranks to
// sample a. Valid only without ties.
double exact_two_sided_p(std::size_t n1, std::size_t n2, double u_observed) {
  const std::size_t total = n1 + n2;
  const double mu = 0.5 * static_cast<double>(n1) * static_cast<double>(n2);
  const double distance = std::abs(u_observed - mu);

  std::uint64_t favorable = 0;
  std::uint64_t arrangements = 0;
  const std::uint32_t limit = 1u << total;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != n1) continue;
    ++arrangements;
    std::uint64_t rank_sum = 0;
    for (std::size_t pos = 0; pos < total; ++pos) {
      if (mask & (1u << pos)) rank_sum += pos + 1;
    }
    const double u = static_cast<double>(rank_sum) -
                     0.5 * static_cast<double>(n1) * static_cast<double>(n1 + 1);
    if (std::abs(u - mu) >= distance - 1e-12) ++favorable;
  }
  return static_cast<double>(favorable) / static_cast<double>(arrangements);
}

}  // namespace

RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b,
                                double alpha) {
  if (a.size() < 2 || b.size() < 2) {
    throw std::invalid_argument("wilcoxon_rank_sum requires at least 2 samples per group");
  }
  const std::size_t n1 = a.size(), n2 = b.size(), total = n1 + n2;

  const auto ranks = midranks(a, b);
  double rank_sum_a = 0.0;
  for (std::size_t i = 0; i < n1; ++i) rank_sum_a += ranks[i];
  const double u = rank_sum_a - 0.5 * static_cast<double>(n1) * static_cast<double>(n1 + 1);

  RankSumResult result;
  result.u_statistic = u;

  const bool tie_free = !has_ties(a, b);
  if (tie_free && total <= 12) {
    result.p_value = exact_two_sided_p(n1, n2, u);
  } else {
    // normal approximation with tie correction and continuity correction
    const double mu = 0.5 * static_cast<double>(n1) * static_cast<double>(n2);
    double tie_term = 0.0;
    {
      std::vector<double> pooled(a.begin(), a.end());
      pooled.insert(pooled.end(), b.begin(), b.end());
      std::sort(pooled.begin(), pooled.end());
      std::size_t i = 0;
      while (i < pooled.size()) {
        std::size_t j = i;
        while (j + 1 < pooled.size() && pooled[j + 1] == pooled[i]) ++j;
        const double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
      }
    }
    const double nn = static_cast<double>(total);
    const double variance = (static_cast<double>(n1) * static_cast<double>(n2) / 12.0) *
                            ((nn + 1.0) - tie_term / (nn * (nn - 1.0)));
    if (variance <= 0.0) {
      result.p_value = 1.0;  // all pooled values identical
    } else {
      const double z = std::max(0.0, std::abs(u - mu) - 0.5) / std::sqrt(variance);
      result.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
    }
  }

  const double mean_a = mean_of(a), mean_b = mean_of(b);
  if (result.p_value < alpha && mean_a > mean_b) {
    result.mark = '+';
  } else if (result.p_value < alpha && mean_a < mean_b) {
    result.mark = '-';
  } else {
    result.mark = '=';
  }
  return result;
}

const std::vector<std::string> kKnownAlgorithms = {
    "hdpso", "pso", "pso-init", "ga", "hhd", "random", "np", "pagerank", "hci1", "hci2"};

bool is_known_algorithm(const std::string& name) {
  return std::find(kKnownAlgorithms.begin(), kKnownAlgorithms.end(), name) !=
         kKnownAlgorithms.end();
}

namespace {

struct CellMetrics {
  std::uint32_t exact_spread = 0;
  std::uint32_t approx_fitness = 0;
};

CellMetrics execute_algorithm(const std::string& algorithm, const Hypergraph& h,
                              const ExperimentPlan& plan, std::uint32_t k, std::uint64_t run_seed,
                              Execution exec) {
  const double p = plan.threshold;

  const auto from_optimizer = [&](Variant variant) {
    OptimizerConfig cfg = plan.optimizer;
    cfg.k = k;
    cfg.p = p;
    cfg.variant = variant;
    cfg.rng_master_seed = run_seed;
    const OptimizationResult r = run_optimizer(h, cfg, exec);
    return CellMetrics{r.exact_spread, r.approx_fitness};
  };

  if (algorithm == "hdpso") return from_optimizer(Variant::hdpso);
  if (algorithm == "pso") return from_optimizer(Variant::pso);
  if (algorithm == "pso-init") return from_optimizer(Variant::pso_init);
  if (algorithm == "ga") {
    GaConfig cfg;
    cfg.k = k;
    cfg.p = p;
    cfg.max_generations = plan.optimizer.max_generations;
    cfg.population = plan.optimizer.population;
    cfg.crossover_prob = plan.ga_crossover;
    cfg.mutation_prob = plan.ga_mutation;
    cfg.rng_master_seed = run_seed;
    const OptimizationResult r = run_ga(h, cfg, exec);
    return CellMetrics{r.exact_spread, r.approx_fitness};
  }

  SeedSelection selection;
  if (algorithm == "hhd") {
    selection = select_hhd(h, k);
  } else if (algorithm == "random") {
    Rng rng(run_seed);
    selection = select_random(h, k, rng);
  } else if (algorithm == "np") {
    selection = select_np(h, k);
  } else if (algorithm == "pagerank") {
    selection = select_pagerank(h, k, 0.85, 100, exec);
  } else if (algorithm == "hci1") {
    selection = select_hci(h, k, 1, exec);
  } else if (algorithm == "hci2") {
    selection = select_hci(h, k, 2, exec);
  } else {
    throw std::invalid_argument("unknown algorithm: " + algorithm);
  }
  evaluate_selection(h, selection, p);
  return CellMetrics{selection.exact_spread, selection.approx_fitness};
}

// Ranks 1..count with ties sharing the average rank; higher value = rank 1.
std::vector<double> rank_descending(const std::vector<double>& values) {
  const std::size_t count = values.size();
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return values[x] > values[y]; });
  std::vector<double> ranks(count, 0.0);
  std::size_t i = 0;
  while (i < count) {
    std::size_t j = i;
    while (j + 1 < count && values[order[j + 1]] == values[order[i]]) ++j;
    const double shared = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = shared;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentPlan& plan, Execution exec) {
  if (plan.runs < 1) throw std::invalid_argument("experiment plan: runs must be >= 1");
  if (plan.algorithms.empty()) throw std::invalid_argument("experiment plan: no algorithms");
  if (plan.seed_sizes.empty()) throw std::invalid_argument("experiment plan: no seed set sizes");
  if (!(plan.threshold > 0.0) || plan.threshold > 1.0) {
    throw std::invalid_argument("experiment plan: threshold must lie in (0, 1]");
  }
  for (const std::string& algorithm : plan.algorithms) {
    if (!is_known_algorithm(algorithm)) {
      throw std::invalid_argument("unknown algorithm: " + algorithm);
    }
  }
  if (!plan.reference.empty() && !is_known_algorithm(plan.reference)) {
    throw std::invalid_argument("unknown reference algorithm: " + plan.reference);
  }

  // Experiments always run on the largest connected component.
  Hypergraph h = plan.generator ? generate(*plan.generator).largest_connected_component()
                                : parse_hyperedge_file(plan.graph_path).largest_connected_component();
  for (std::uint32_t k : plan.seed_sizes) {
    if (k == 0 || k > h.node_count()) {
      throw std::invalid_argument("seed set size " + std::to_string(k) +
                                  " infeasible for component with n=" +
                                  std::to_string(h.node_count()));
    }
  }

  ExperimentReport report;
  report.reference = plan.reference;
  report.alpha = plan.alpha;

  for (std::size_t ai = 0; ai < plan.algorithms.size(); ++ai) {
    const std::string& algorithm = plan.algorithms[ai];
    for (std::size_t ki = 0; ki < plan.seed_sizes.size(); ++ki) {
      const std::uint32_t k = plan.seed_sizes[ki];
      for (std::uint32_t run = 0; run < plan.runs; ++run) {
        const std::uint64_t run_seed =
            Rng::derive(plan.master_seed, {kRunStream, ai, ki, run}).next();
        const auto start = std::chrono::steady_clock::now();
        const CellMetrics metrics = execute_algorithm(algorithm, h, plan, k, run_seed, exec);
        const auto stop = std::chrono::steady_clock::now();
        RunRow row;
        row.algorithm = algorithm;
        row.graph_id = plan.graph_id;
        row.k = k;
        row.p = plan.threshold;
        row.run = run;
        row.exact_spread = metrics.exact_spread;
        row.approx_fitness = metrics.approx_fitness;
        row.runtime_ms =
            plan.record_timing
                ? std::chrono::duration<double, std::milli>(stop - start).count()
                : 0.0;
        report.runs.push_back(std::move(row));
      }
    }
  }

  // per-cell aggregates
  const auto cell_values = [&](const std::string& algorithm, std::uint32_t k) {
    std::vector<double> values;
    for (const RunRow& row : report.runs) {
      if (row.algorithm == algorithm && row.k == k) {
        values.push_back(static_cast<double>(row.exact_spread));
      }
    }
    return values;
  };

  for (std::uint32_t k : plan.seed_sizes) {
    std::vector<double> means(plan.algorithms.size());
    std::vector<double> bests(plan.algorithms.size());
    for (std::size_t ai = 0; ai < plan.algorithms.size(); ++ai) {
      const auto values = cell_values(plan.algorithms[ai], k);
      means[ai] = mean_of(values);
      bests[ai] = *std::max_element(values.begin(), values.end());
    }
    const auto mean_ranks = rank_descending(means);

    const bool have_reference =
        std::find(plan.algorithms.begin(), plan.algorithms.end(), plan.reference) !=
        plan.algorithms.end();
    std::vector<double> reference_values;
    if (have_reference) reference_values = cell_values(plan.reference, k);

    for (std::size_t ai = 0; ai < plan.algorithms.size(); ++ai) {
      const auto values = cell_values(plan.algorithms[ai], k);
      double varsum = 0.0;
      for (double v : values) varsum += (v - means[ai]) * (v - means[ai]);
      SummaryRow row;
      row.algorithm = plan.algorithms[ai];
      row.graph_id = plan.graph_id;
      row.k = k;
      row.mean = means[ai];
      row.stddev = std::sqrt(varsum / static_cast<double>(values.size()));
      row.mean_rank = mean_ranks[ai];
      if (have_reference && values.size() >= 2 && reference_values.size() >= 2) {
        row.mark = wilcoxon_rank_sum(reference_values, values, plan.alpha).mark;
      }
      report.summary.push_back(std::move(row));
    }
  }

  // rank summary across cells
  for (std::size_t ai = 0; ai < plan.algorithms.size(); ++ai) {
    AlgorithmRanks ranks;
    ranks.algorithm = plan.algorithms[ai];
    report.ranks.push_back(std::move(ranks));
  }
  for (std::uint32_t k : plan.seed_sizes) {
    std::vector<double> means(plan.algorithms.size());
    std::vector<double> bests(plan.algorithms.size());
    for (std::size_t ai = 0; ai < plan.algorithms.size(); ++ai) {
      const auto values = cell_values(plan.algorithms[ai], k);
      means[ai] = mean_of(values);
      bests[ai] = *std::max_element(values.begin(), values.end());
    }
    const auto mean_ranks = rank_descending(means);
    const auto best_ranks = rank_descending(bests);
    for (std::size_t ai = 0; ai < plan.algorithms.size(); ++ai) {
      report.ranks[ai].avg_mean_value += means[ai];
      report.ranks[ai].avg_best_value += bests[ai];
      report.ranks[ai].avg_mean_rank += mean_ranks[ai];
      report.ranks[ai].avg_best_rank += best_ranks[ai];
    }
  }
  const double cells = static_cast<double>(plan.seed_sizes.size());
  for (AlgorithmRanks& ranks : report.ranks) {
    ranks.avg_mean_value /= cells;
    ranks.avg_best_value /= cells;
    ranks.avg_mean_rank /= cells;
    ranks.avg_best_rank /= cells;
  }
  return report;
}

void write_report_csv(const ExperimentReport& report, const std::string& path_prefix) {
  {
    const std::string path = path_prefix + ".runs.csv";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "algorithm,graph,k,p,run,exact_spread,approx_fitness,runtime_ms\n";
    char buf[64];
    for (const RunRow& row : report.runs) {
      std::snprintf(buf, sizeof(buf), "%.3f", row.p);
      out << row.algorithm << ',' << row.graph_id << ',' << row.k << ',' << buf << ',' << row.run
          << ',' << row.exact_spread << ',' << row.approx_fitness << ',';
      std::snprintf(buf, sizeof(buf), "%.3f", row.runtime_ms);
      out << buf << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
  }
  {
    const std::string path = path_prefix + ".summary.csv";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "algorithm,graph,k,mean,std,mark,mean_rank\n";
    char buf[96];
    for (const SummaryRow& row : report.summary) {
      std::snprintf(buf, sizeof(buf), "%.3f,%.3f,%c,%.3f", row.mean, row.stddev, row.mark,
                    row.mean_rank);
      out << row.algorithm << ',' << row.graph_id << ',' << row.k << ',' << buf << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
  }
}

std::string format_report_summary(const ExperimentReport& report) {
  std::ostringstream out;
  out << "algorithm        k    mean      std       mark  mean_rank\n";
  char buf[160];
  for (const SummaryRow& row : report.summary) {
    std::snprintf(buf, sizeof(buf), "%-15s %-4u %-9.3f %-9.3f %c     %.3f\n",
                  row.algorithm.c_str(), row.k, row.mean, row.stddev, row.mark, row.mean_rank);
    out << buf;
  }
  out << "\nalgorithm        avg_mean   avg_best   avg_mean_rank  avg_best_rank\n";
  for (const AlgorithmRanks& ranks : report.ranks) {
    std::snprintf(buf, sizeof(buf), "%-15s %-10.3f %-10.3f %-14.3f %.3f\n",
                  ranks.algorithm.c_str(), ranks.avg_mean_value, ranks.avg_best_value,
                  ranks.avg_mean_rank, ranks.avg_best_rank);
    out << buf;
  }
  out << "\nmarks: vs reference '" << report.reference << "' (Wilcoxon rank-sum, alpha="
      << report.alpha << ")\n";
  return out.str();
}

}  // namespace hyperim
