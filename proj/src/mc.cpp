#include "vinechar/mc.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <omp.h>
#include <fmt/core.h>

#include "vinechar/carbon.hpp"
#include "vinechar/error.hpp"

namespace vinechar::mc {

void validate(const McConfig& cfg) {
  if (cfg.iterations < 1) {
    throw Error(ErrorKind::InvalidParameter, "iterations must be at least 1");
  }
  if (cfg.histogram_bins < 1) {
    throw Error(ErrorKind::InvalidParameter, "histogram bins must be at least 1");
  }
}

double nearest_rank(std::span<const double> sorted, double p) {
  const auto n = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * n));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

Statistics summarize(std::span<const double> values, int bins) {
  if (values.empty()) throw Error(ErrorKind::EmptyInput, "cannot summarize an empty list");
  if (bins < 1) throw Error(ErrorKind::InvalidParameter, "histogram bins must be at least 1");

  Statistics s;
  s.count = values.size();
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  s.min = sorted.front();
  s.max = sorted.back();

  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.count);
  if (s.min == s.max) {
    s.mean = s.min;  // summation can drift off a constant
  } else if (s.count > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(s.count - 1));
  }
  s.p5 = nearest_rank(sorted, 5.0);
  s.p50 = nearest_rank(sorted, 50.0);
  s.p95 = nearest_rank(sorted, 95.0);

  const auto nbins = static_cast<std::size_t>(bins);
  const double width = (s.max - s.min) / static_cast<double>(nbins);
  s.histogram.edges.resize(nbins + 1);
  for (std::size_t b = 0; b <= nbins; ++b) {
    s.histogram.edges[b] = s.min + width * static_cast<double>(b);
  }
  s.histogram.edges.back() = s.max;
  s.histogram.counts.assign(nbins, 0);
  for (double v : values) {
    std::size_t b = 0;
    if (width > 0.0) {
      b = std::min(nbins - 1, static_cast<std::size_t>((v - s.min) / width));
    }
    ++s.histogram.counts[b];
  }
  return s;
}

double fraction_above(std::span<const double> values, double threshold) {
  if (values.empty()) return 0.0;
  const auto n = std::count_if(values.begin(), values.end(),
                               [threshold](double v) { return v > threshold; });
  return static_cast<double>(n) / static_cast<double>(values.size());
}

void SampleMatrix::add_column(std::string name, std::vector<double> values) {
  names_.push_back(std::move(name));
  columns_.push_back(std::move(values));
}

bool SampleMatrix::has(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::span<const double> SampleMatrix::column(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw Error(ErrorKind::UnknownVariable, fmt::format("no sampled variable '{}'", name));
  }
  return columns_[static_cast<std::size_t>(it - names_.begin())];
}

IterationRecord evaluate_iteration(const ScenarioSpec& spec, const DrawSampler& sampler,
                                   const dist::SampleStream& stream, std::uint64_t index) {
  IterationRecord rec;
  rec.draw = sampler(stream, index);
  rec.result = chain::evaluate_chain(spec, rec.draw);
  carbon::SequestrationCostInputs in;
  in.capital = rec.draw.biochar.capital_equipment;
  in.recovery_factor = finance::crf(spec.finance.discount_rate,
                                    spec.finance.equipment_life_years);
  in.annual_operating_cost = rec.result.biochar_operating_cost;
  in.co2_per_year = rec.result.co2_tonnes;
  in.ag_benefit = spec.ag_benefit_per_t_co2;
  in.coproduct_benefit = spec.coproduct_benefit_per_t_co2;
  rec.sequestration_cost = carbon::sequestration_cost(in);
  return rec;
}

std::vector<IterationRecord> evaluate_iterations(const ScenarioSpec& spec,
                                                 const McConfig& cfg) {
  const DrawSampler sampler(spec);
  const dist::SampleStream stream(cfg.master_seed);
  const auto n = static_cast<std::int64_t>(cfg.iterations);
  std::vector<IterationRecord> records(cfg.iterations);
  std::vector<std::optional<Error>> failures(cfg.iterations);
  const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();

#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto slot = static_cast<std::size_t>(i);
    try {
      records[slot] = evaluate_iteration(spec, sampler, stream, static_cast<std::uint64_t>(i));
    } catch (const Error& e) {
      failures[slot] = e;
    }
  }

  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (failures[i]) {
      throw Error(failures[i]->kind(), fmt::format("iteration {}: {}", i, failures[i]->what()));
    }
  }
  return records;
}

namespace {

template <class Get>
std::vector<double> gather(const std::vector<IterationRecord>& records, Get get) {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(get(r));
  return out;
}

double mean_of(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

}  // namespace

McResult collect(const ScenarioSpec& spec, const McConfig& cfg,
                 const std::vector<IterationRecord>& records) {
  if (records.empty()) throw Error(ErrorKind::EmptyInput, "no iterations to collect");
  McResult out;
  McSummary& s = out.summary;
  s.scenario = spec.name;
  s.iterations = records.size();
  s.master_seed = cfg.master_seed;
  SampleMatrix& m = out.samples;

  // Sampled inputs, in variable visit order.
  const std::vector<std::string> ids = variable_ids();
  std::vector<std::vector<double>> inputs(ids.size());
  for (auto& col : inputs) col.reserve(records.size());
  for (const auto& r : records) {
    std::size_t k = 0;
    visit_values(r.draw, [&](const double& v) { inputs[k++].push_back(v); });
  }
  for (std::size_t k = 0; k < ids.size(); ++k) m.add_column(ids[k], std::move(inputs[k]));

  using R = IterationRecord;
  auto derived = [&](const char* name, auto get) {
    auto col = gather(records, get);
    m.add_column(name, col);
    return col;
  };
  const auto biochar_t = derived("biochar.production_t", [](const R& r) { return r.result.biochar_tonnes; });
  derived("biochar.operating_cost", [](const R& r) { return r.result.biochar_operating_cost; });
  const auto area = derived("vineyard.treated_ha", [](const R& r) { return r.result.treated_hectares; });
  derived("vineyard.biochar_t", [](const R& r) { return r.result.vineyard_biochar_tonnes; });
  const auto grapes = derived("vineyard.extra_grapes_t", [](const R& r) { return r.result.extra_grapes; });
  derived("vineyard.revenue_per_ha", [](const R& r) { return r.result.vineyard_revenue_per_ha; });
  derived("vineyard.variable_cost_per_ha", [](const R& r) { return r.result.vineyard_variable_cost_per_ha; });
  derived("vineyard.planting_capital", [](const R& r) { return r.result.planting_capital; });
  const auto litres = derived("winery.extra_litres", [](const R& r) { return r.result.extra_wine_litres; });
  derived("winery.wine_price", [](const R& r) { return r.result.wine_price; });
  derived("winery.wine_cost", [](const R& r) { return r.result.wine_cost; });
  const auto co2 = derived("carbon.co2_t", [](const R& r) { return r.result.co2_tonnes; });
  const auto seq = derived("carbon.sequestration_cost", [](const R& r) { return r.sequestration_cost; });

  const double mean_area = mean_of(area);
  auto sector = [&](const char* name, auto pick) {
    const std::string prefix(name);
    auto bc = derived((prefix + ".bc_ratio").c_str(),
                      [&](const R& r) { return pick(r.result).bc_ratio; });
    auto npv = derived((prefix + ".npv").c_str(),
                       [&](const R& r) { return pick(r.result).npv; });
    auto income = derived((prefix + ".annual_net_income").c_str(),
                          [&](const R& r) { return pick(r.result).annual_net_income; });
    SectorSummary out;
    out.bc_ratio = summarize(bc, cfg.histogram_bins);
    out.npv = summarize(npv, cfg.histogram_bins);
    out.annual_net_income = summarize(income, cfg.histogram_bins);
    out.prob_bc_gt_1 = fraction_above(bc, 1.0);
    if (mean_area > 0.0) {
      out.annual_net_income_per_ha = out.annual_net_income.mean / mean_area;
      out.npv_per_ha = out.npv.mean / mean_area;
    }
    return out;
  };
  using CR = chain::ChainResult;
  s.biochar = sector("biochar", [](const CR& c) -> const chain::SectorResult& { return c.biochar; });
  s.vineyard = sector("vineyard", [](const CR& c) -> const chain::SectorResult& { return c.vineyard; });
  s.winery = sector("winery", [](const CR& c) -> const chain::SectorResult& { return c.winery; });
  s.chain = sector("chain", [](const CR& c) -> const chain::SectorResult& { return c.total; });

  s.mean_biochar_tonnes = mean_of(biochar_t);
  s.mean_treated_hectares = mean_area;
  s.mean_extra_grapes = mean_of(grapes);
  s.mean_extra_wine_litres = mean_of(litres);
  s.mean_co2_tonnes = mean_of(co2);
  s.sequestration_cost = summarize(seq, cfg.histogram_bins);
  return out;
}

McResult run(const ScenarioSpec& spec, const McConfig& cfg) {
  validate(spec);
  validate(cfg);
  return collect(spec, cfg, evaluate_iterations(spec, cfg));
}

}  // namespace vinechar::mc
