#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "vinechar/dist.hpp"
#include "vinechar/finance.hpp"
#include "vinechar/sample_stream.hpp"

namespace vinechar {

enum class ScenarioKind { Independent, Integrated };

/// Whether the vineyard's accounts carry the amortized biochar purchase.
/// `Excluded` reproduces the published vineyard NPV arithmetic (NPV equals
/// the discounted revenue-minus-variable-cost stream less planting capital);
/// `Amortized` charges area x application rate x price / amortization years
/// every year.
enum class VineyardBiocharCost { Excluded, Amortized };

std::string_view to_string(ScenarioKind k);
std::string_view to_string(VineyardBiocharCost c);

// The variable tables are templates over the stored type so the scenario
// (distributions) and one sampled draw (doubles) share field names, and a
// single visitor enumerates the stable variable ids for both.

template <class T>
struct BiocharFields {
  T pomace_supply;         // t
  T prunings_supply;       // t
  T pomace_cost;           // $/t
  T prunings_cost;         // $/t
  T conversion_rate;       // t biochar / t feedstock
  T biochar_price;         // $/t
  T fixed_cost_per_t;      // $/t
  T variable_cost_per_t;   // $/t
  T capital_equipment;     // $

  template <class Self, class F>
  static void visit(Self& self, F&& f) {
    f("pomace_supply", self.pomace_supply);
    f("prunings_supply", self.prunings_supply);
    f("pomace_cost", self.pomace_cost);
    f("prunings_cost", self.prunings_cost);
    f("conversion_rate", self.conversion_rate);
    f("biochar_price", self.biochar_price);
    f("fixed_cost_per_t", self.fixed_cost_per_t);
    f("variable_cost_per_t", self.variable_cost_per_t);
    f("capital_equipment", self.capital_equipment);
  }
};

template <class T>
struct VineyardFields {
  T total_grape_production;          // t, informational only
  T yield_t_per_ha;                  // t/ha
  T yield_increase;                  // fraction
  T grape_price;                     // $/t
  T direct_cost_per_ha;              // $/ha
  T capital_cost_per_t;              // $ per extra t of grapes
  T application_rate;                // t biochar / ha
  T application_amortization_years;  // years
  T max_fraction_treated;            // fraction of total hectares
  T total_hectares;                  // ha

  template <class Self, class F>
  static void visit(Self& self, F&& f) {
    f("total_grape_production", self.total_grape_production);
    f("yield_t_per_ha", self.yield_t_per_ha);
    f("yield_increase", self.yield_increase);
    f("grape_price", self.grape_price);
    f("direct_cost_per_ha", self.direct_cost_per_ha);
    f("capital_cost_per_t", self.capital_cost_per_t);
    f("application_rate", self.application_rate);
    f("application_amortization_years", self.application_amortization_years);
    f("max_fraction_treated", self.max_fraction_treated);
    f("total_hectares", self.total_hectares);
  }
};

template <class T>
struct WineryFields {
  T white_price;      // $/L
  T red_price;        // $/L
  T white_cost;       // $/L
  T red_cost;         // $/L
  T white_share;      // fraction
  T red_share;        // fraction; a draw uses 1 - white_share
  T extraction_rate;  // L per t of grapes

  template <class Self, class F>
  static void visit(Self& self, F&& f) {
    f("white_price", self.white_price);
    f("red_price", self.red_price);
    f("white_cost", self.white_cost);
    f("red_cost", self.red_cost);
    f("white_share", self.white_share);
    f("red_share", self.red_share);
    f("extraction_rate", self.extraction_rate);
  }
};

template <class T>
struct CarbonFields {
  T carbon_content;  // t C / t biochar
  T offset_price;    // $/t CO2
  T co2_per_car;     // t CO2 per vehicle-year

  template <class Self, class F>
  static void visit(Self& self, F&& f) {
    f("carbon_content", self.carbon_content);
    f("offset_price", self.offset_price);
    f("co2_per_car", self.co2_per_car);
  }
};

/// Calls f(variable_id, field) for every uncertain variable, with ids of the
/// form "section.field". Works for ScenarioSpec and Draw alike.
template <class Tables, class F>
void visit_variables(Tables& t, F&& f) {
  auto prefixed = [&f](const char* section) {
    return [&f, section](const char* name, auto& field) {
      f(std::string(section) + "." + name, field);
    };
  };
  std::remove_cvref_t<decltype(t.biochar)>::visit(t.biochar, prefixed("biochar"));
  std::remove_cvref_t<decltype(t.vineyard)>::visit(t.vineyard, prefixed("vineyard"));
  std::remove_cvref_t<decltype(t.winery)>::visit(t.winery, prefixed("winery"));
  std::remove_cvref_t<decltype(t.carbon)>::visit(t.carbon, prefixed("carbon"));
}

/// Like visit_variables but without building ids; for hot loops.
template <class Tables, class F>
void visit_values(Tables& t, F&& f) {
  auto drop = [&f](const char*, auto& field) { f(field); };
  std::remove_cvref_t<decltype(t.biochar)>::visit(t.biochar, drop);
  std::remove_cvref_t<decltype(t.vineyard)>::visit(t.vineyard, drop);
  std::remove_cvref_t<decltype(t.winery)>::visit(t.winery, drop);
  std::remove_cvref_t<decltype(t.carbon)>::visit(t.carbon, drop);
}

using dist::TriangularDist;

struct ScenarioSpec {
  std::string name;
  ScenarioKind kind = ScenarioKind::Independent;
  finance::FinanceParams finance;
  VineyardBiocharCost vineyard_biochar_cost = VineyardBiocharCost::Excluded;

  BiocharFields<TriangularDist> biochar;
  VineyardFields<TriangularDist> vineyard;
  WineryFields<TriangularDist> winery;
  CarbonFields<TriangularDist> carbon;

  // Sequestration-cost credits ($/t CO2): agricultural-use benefit and
  // coproduct benefit.
  double ag_benefit_per_t_co2 = 0.0;
  double coproduct_benefit_per_t_co2 = 0.0;
};

/// One concrete realization of every uncertain variable.
struct Draw {
  std::uint64_t iteration = 0;
  BiocharFields<double> biochar{};
  VineyardFields<double> vineyard{};
  WineryFields<double> winery{};
  CarbonFields<double> carbon{};
};

/// Validates every distribution and the cross-field constraints. Throws
/// vinechar::Error.
void validate(const ScenarioSpec& spec);

/// Non-fatal consistency notes (for example the published grape production
/// total disagreeing with hectares x yield).
std::vector<std::string> consistency_warnings(const ScenarioSpec& spec);

/// Every variable at its mode.
Draw base_draw(const ScenarioSpec& spec);

/// Samples every variable for one iteration, keyed by (seed, iteration, id).
/// Variable-id hashes are computed once at construction.
class DrawSampler {
 public:
  explicit DrawSampler(const ScenarioSpec& spec);

  Draw operator()(const dist::SampleStream& stream, std::uint64_t iteration) const;

 private:
  struct Slot {
    std::uint64_t key;
    TriangularDist dist;
  };
  std::vector<Slot> slots_;
};

Draw sample_draw(const ScenarioSpec& spec, const dist::SampleStream& stream,
                 std::uint64_t iteration);

/// Stable ids of every uncertain variable, in visit order.
std::vector<std::string> variable_ids();

}  // namespace vinechar
