#include "vinechar/carbon.hpp"

#include <cmath>

#include "vinechar/error.hpp"

namespace vinechar::carbon {

double co2_sequestered(double biochar_t, double carbon_content) {
  return biochar_t * carbon_content * kCo2PerCarbon;
}

double sequestration_cost(const SequestrationCostInputs& in) {
  if (in.co2_per_year == 0.0) {
    throw Error(ErrorKind::ZeroSequestration, "no CO2 sequestered");
  }
  return (in.capital * in.recovery_factor + in.annual_operating_cost) / in.co2_per_year -
         in.ag_benefit - in.coproduct_benefit;
}

double implied_ag_benefit(const SequestrationCostInputs& in, double target) {
  SequestrationCostInputs gross = in;
  gross.ag_benefit = 0.0;
  return sequestration_cost(gross) - target;
}

double offset_benefit(double co2_t, double offset_price) { return co2_t * offset_price; }

std::int64_t cars_equivalent(double co2_t, double co2_per_car) {
  if (!(co2_per_car > 0.0)) {
    throw Error(ErrorKind::InvalidParameter, "CO2 per car must be positive");
  }
  return static_cast<std::int64_t>(std::floor(co2_t / co2_per_car));
}

}  // namespace vinechar::carbon
