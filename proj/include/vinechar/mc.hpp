#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vinechar/chain.hpp"
#include "vinechar/scenario.hpp"

namespace vinechar::mc {

struct McConfig {
  std::size_t iterations = 1000;
  std::uint64_t master_seed = 0;
  int histogram_bins = 30;
  int threads = 0;  // 0: OpenMP default
};

void validate(const McConfig& cfg);

struct Histogram {
  std::vector<double> edges;  // bins + 1, equal width over [min, max]
  std::vector<std::size_t> counts;
};

struct Statistics {
  std::size_t count = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double std = 0.0;  // unbiased; 0 for a single value
  double p5 = 0.0;   // nearest-rank percentiles
  double p50 = 0.0;
  double p95 = 0.0;
  Histogram histogram;
};

/// Throws EmptyInput.
Statistics summarize(std::span<const double> values, int bins);

/// Fraction of values strictly greater than threshold.
double fraction_above(std::span<const double> values, double threshold);

/// Nearest-rank percentile of already sorted values, p in (0, 100].
double nearest_rank(std::span<const double> sorted, double p);

struct SectorSummary {
  Statistics bc_ratio;
  Statistics npv;
  Statistics annual_net_income;
  double prob_bc_gt_1 = 0.0;
  // mean(sector value) / mean(treated hectares)
  double annual_net_income_per_ha = 0.0;
  double npv_per_ha = 0.0;
};

struct McSummary {
  std::string scenario;
  std::size_t iterations = 0;
  std::uint64_t master_seed = 0;

  SectorSummary biochar;
  SectorSummary vineyard;
  SectorSummary winery;
  SectorSummary chain;

  double mean_biochar_tonnes = 0.0;
  double mean_treated_hectares = 0.0;
  double mean_extra_grapes = 0.0;
  double mean_extra_wine_litres = 0.0;
  double mean_co2_tonnes = 0.0;
  Statistics sequestration_cost;  // $/t CO2, unclamped
};

/// Column store of every sampled input, derived quantity and output, one row
/// per iteration in iteration order.
class SampleMatrix {
 public:
  void add_column(std::string name, std::vector<double> values);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t rows() const { return columns_.empty() ? 0 : columns_.front().size(); }
  bool has(const std::string& name) const;

  /// Throws UnknownVariable.
  std::span<const double> column(const std::string& name) const;
  std::span<const double> column(std::size_t index) const { return columns_[index]; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<double>> columns_;
};

struct IterationRecord {
  Draw draw;
  chain::ChainResult result;
  double sequestration_cost = 0.0;
};

struct McResult {
  McSummary summary;
  SampleMatrix samples;
};

/// One iteration; a pure function of (spec, sampler, stream, index).
IterationRecord evaluate_iteration(const ScenarioSpec& spec, const DrawSampler& sampler,
                                   const dist::SampleStream& stream, std::uint64_t index);

/// OpenMP kernel over iterations. Each record lands in its own slot, so the
/// output is identical for any thread count.
std::vector<IterationRecord> evaluate_iterations(const ScenarioSpec& spec,
                                                 const McConfig& cfg);

/// Single-threaded reference for evaluate_iterations.
std::vector<IterationRecord> evaluate_iterations_serial(const ScenarioSpec& spec,
                                                        const McConfig& cfg);

/// Folds records in iteration order into a summary and the sample matrix.
McResult collect(const ScenarioSpec& spec, const McConfig& cfg,
                 const std::vector<IterationRecord>& records);

/// Validates spec and cfg, then evaluates in parallel. A failing draw aborts
/// the run with the lowest failing iteration index in the message.
McResult run(const ScenarioSpec& spec, const McConfig& cfg);

McResult run_serial(const ScenarioSpec& spec, const McConfig& cfg);

}  // namespace vinechar::mc
