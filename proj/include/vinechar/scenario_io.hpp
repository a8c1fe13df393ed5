#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "vinechar/mc.hpp"
#include "vinechar/scenario.hpp"

namespace vinechar::io {

/// On-disk scenario: the model parameters plus Monte Carlo settings.
///
/// JSON layout (all sections required unless noted):
///
///   name                   string
///   kind                   "independent" | "integrated"
///   vineyard_biochar_cost  "excluded" | "amortized"   (optional, "excluded")
///   finance                {discount_rate, horizon_years, equipment_life_years}
///   monte_carlo            {iterations, seed, histogram_bins}   (optional)
///   biochar, vineyard, winery, carbon
///                          one entry per variable: {"low", "mode", "high"}
///                          or a bare number for a constant
///   carbon also holds the scalars ag_benefit_per_t_co2 and
///   coproduct_benefit_per_t_co2 (optional, 0).
///
/// Unknown keys anywhere are rejected with their JSON pointer.
struct ScenarioFile {
  ScenarioSpec spec;
  mc::McConfig mc;
};

/// Throws Error{Parse}; syntax errors name source:line:column, schema
/// errors name source and the offending JSON pointer.
ScenarioFile parse_scenario(std::string_view text, std::string_view source = "<memory>");

ScenarioFile load_scenario(const std::filesystem::path& path);

std::string serialize_scenario(const ScenarioFile& file);

}  // namespace vinechar::io
