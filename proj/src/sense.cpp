#include "vinechar/sense.hpp"

#include <algorithm>
#include <map>

#include <fmt/core.h>

#include "vinechar/error.hpp"

namespace vinechar::sense {

double r_squared(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorKind::LengthMismatch,
                fmt::format("regressor has {} values, outcome has {}", xs.size(), ys.size()));
  }
  if (xs.size() < 2) throw Error(ErrorKind::TooFew, "need at least two observations");

  auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
  };
  if (constant(xs) || constant(ys)) return 0.0;

  const auto n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) return 0.0;
  return std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
}

const std::vector<std::string>& sectors() {
  static const std::vector<std::string> names{"biochar", "vineyard", "winery"};
  return names;
}

const std::vector<std::string>& default_variables(const std::string& sector) {
  static const std::map<std::string, std::vector<std::string>> table{
      {"biochar",
       {"biochar.biochar_price", "biochar.variable_cost_per_t", "biochar.capital_equipment",
        "biochar.production_t"}},
      {"vineyard",
       {"vineyard.treated_ha", "vineyard.grape_price", "vineyard.revenue_per_ha",
        "vineyard.variable_cost_per_ha", "vineyard.planting_capital"}},
      {"winery", {"winery.wine_price", "winery.extra_litres", "winery.wine_cost"}},
  };
  const auto it = table.find(sector);
  if (it == table.end()) {
    throw Error(ErrorKind::UnknownSector, fmt::format("unknown sector '{}'", sector));
  }
  return it->second;
}

SensitivityReport sensitivity_report(const mc::SampleMatrix& samples, const std::string& sector,
                                     const std::string& outcome,
                                     const std::optional<std::vector<std::string>>& variables) {
  const auto& regressors = variables ? *variables : default_variables(sector);
  if (std::find(sectors().begin(), sectors().end(), sector) == sectors().end()) {
    throw Error(ErrorKind::UnknownSector, fmt::format("unknown sector '{}'", sector));
  }
  const auto ys = samples.column(sector + "." + outcome);

  SensitivityReport report{sector, outcome, {}};
  for (const auto& id : regressors) {
    report.entries.push_back({id, r_squared(samples.column(id), ys), 0});
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const SensitivityEntry& a, const SensitivityEntry& b) {
              if (a.r_squared != b.r_squared) return a.r_squared > b.r_squared;
              return a.variable_id < b.variable_id;
            });
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    report.entries[i].rank = static_cast<int>(i) + 1;
  }
  return report;
}

}  // namespace vinechar::sense
