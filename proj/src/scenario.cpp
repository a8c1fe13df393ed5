#include "vinechar/scenario.hpp"

#include <cmath>

#include <fmt/core.h>

#include "vinechar/error.hpp"
#include "vinechar/sample_stream.hpp"

namespace vinechar {

std::string_view to_string(ScenarioKind k) {
  return k == ScenarioKind::Independent ? "independent" : "integrated";
}

std::string_view to_string(VineyardBiocharCost c) {
  return c == VineyardBiocharCost::Excluded ? "excluded" : "amortized";
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::InvalidParameter, message);
}

}  // namespace

void validate(const ScenarioSpec& spec) {
  finance::validate(spec.finance);
  visit_variables(spec, [](const std::string& id, const TriangularDist& d) {
    dist::validate(d, id);
  });

  auto non_negative = [](const std::string& id, const TriangularDist& d) {
    require(d.low >= 0.0, fmt::format("{}: must be non-negative", id));
  };
  visit_variables(spec, non_negative);

  auto fraction = [](const char* id, const TriangularDist& d) {
    require(d.low >= 0.0 && d.high <= 1.0, fmt::format("{}: must lie in [0, 1]", id));
  };
  fraction("biochar.conversion_rate", spec.biochar.conversion_rate);
  fraction("vineyard.max_fraction_treated", spec.vineyard.max_fraction_treated);
  fraction("winery.white_share", spec.winery.white_share);
  fraction("winery.red_share", spec.winery.red_share);
  fraction("carbon.carbon_content", spec.carbon.carbon_content);

  require(spec.vineyard.application_rate.low > 0.0,
          "vineyard.application_rate: must be positive");
  require(spec.vineyard.application_amortization_years.low >= 1.0,
          "vineyard.application_amortization_years: must be at least 1");
  require(spec.carbon.co2_per_car.low > 0.0, "carbon.co2_per_car: must be positive");

  const double share_sum = spec.winery.white_share.mode + spec.winery.red_share.mode;
  require(std::abs(share_sum - 1.0) <= 1e-9,
          fmt::format("winery shares sum to {} at base values, expected 1", share_sum));

  require(spec.ag_benefit_per_t_co2 >= 0.0 && spec.coproduct_benefit_per_t_co2 >= 0.0,
          "carbon benefits must be non-negative");
}

std::vector<std::string> consistency_warnings(const ScenarioSpec& spec) {
  std::vector<std::string> notes;
  const auto& v = spec.vineyard;
  const double implied = v.total_hectares.mode * v.yield_t_per_ha.mode;
  const double stated = v.total_grape_production.mode;
  if (stated > 0.0 && std::abs(implied - stated) / stated > 0.05) {
    notes.push_back(fmt::format(
        "vineyard.total_grape_production base {:.0f} t differs from total_hectares x "
        "yield_t_per_ha = {:.0f} t; hectares and yield are used",
        stated, implied));
  }
  const auto& w = spec.winery;
  if (std::abs(w.red_share.low - (1.0 - w.white_share.high)) > 1e-9 ||
      std::abs(w.red_share.high - (1.0 - w.white_share.low)) > 1e-9) {
    notes.push_back(
        "winery.red_share does not mirror white_share; draws use 1 - white_share");
  }
  return notes;
}

Draw base_draw(const ScenarioSpec& spec) {
  Draw draw;
  // Visit both in lockstep: identical visit order for spec and draw.
  std::vector<double> modes;
  visit_variables(spec, [&](const std::string&, const TriangularDist& d) {
    modes.push_back(d.mode);
  });
  std::size_t i = 0;
  visit_values(draw, [&](double& v) { v = modes[i++]; });
  draw.winery.red_share = 1.0 - draw.winery.white_share;
  return draw;
}

DrawSampler::DrawSampler(const ScenarioSpec& spec) {
  visit_variables(spec, [this](const std::string& id, const TriangularDist& d) {
    slots_.push_back({dist::SampleStream::variable_key(id), d});
  });
}

Draw DrawSampler::operator()(const dist::SampleStream& stream,
                             std::uint64_t iteration) const {
  Draw draw;
  draw.iteration = iteration;
  std::size_t i = 0;
  visit_values(draw, [&](double& v) {
    const Slot& slot = slots_[i++];
    v = slot.dist.degenerate() ? slot.dist.mode
                               : dist::sample(slot.dist, stream.uniform(iteration, slot.key));
  });
  draw.winery.red_share = 1.0 - draw.winery.white_share;
  return draw;
}

Draw sample_draw(const ScenarioSpec& spec, const dist::SampleStream& stream,
                 std::uint64_t iteration) {
  return DrawSampler(spec)(stream, iteration);
}

std::vector<std::string> variable_ids() {
  std::vector<std::string> ids;
  Draw d;
  visit_variables(d, [&](const std::string& id, double&) { ids.push_back(id); });
  return ids;
}

}  // namespace vinechar
