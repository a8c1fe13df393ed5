#pragma once

#include <cstdint>

namespace vinechar::carbon {

/// Molar-mass ratio CO2 / C.
inline constexpr double kCo2PerCarbon = 44.0 / 12.0;

double co2_sequestered(double biochar_t, double carbon_content);

struct SequestrationCostInputs {
  double capital = 0.0;                 // K, $
  double recovery_factor = 0.0;         // alpha, 1/yr
  double annual_operating_cost = 0.0;   // C, $/yr
  double co2_per_year = 0.0;            // delta CO2, t/yr
  double ag_benefit = 0.0;              // B_a, $/t CO2
  double coproduct_benefit = 0.0;       // B_c, $/t CO2
};

/// (K alpha + C) / dCO2 - B_a - B_c in $/t CO2. May be negative; clamping
/// to zero is a reporting concern. Throws ZeroSequestration.
double sequestration_cost(const SequestrationCostInputs& in);

/// The agricultural benefit B_a that makes sequestration_cost hit `target`
/// for the given inputs (their ag_benefit is ignored).
double implied_ag_benefit(const SequestrationCostInputs& in, double target);

double offset_benefit(double co2_t, double offset_price);

/// Whole vehicles, rounded down.
std::int64_t cars_equivalent(double co2_t, double co2_per_car);

}  // namespace vinechar::carbon
