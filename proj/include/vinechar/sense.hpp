#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vinechar/mc.hpp"

namespace vinechar::sense {

/// Coefficient of determination of a simple linear regression of ys on xs,
/// i.e. the squared Pearson correlation. Zero when either side has no
/// variance. Throws LengthMismatch or TooFew.
double r_squared(std::span<const double> xs, std::span<const double> ys);

struct SensitivityEntry {
  std::string variable_id;
  double r_squared = 0.0;
  int rank = 0;
};

struct SensitivityReport {
  std::string sector;
  std::string outcome;
  std::vector<SensitivityEntry> entries;  // ordered by rank
};

const std::vector<std::string>& sectors();

/// Regressors examined for a sector's B/C ratio by default.
/// Throws UnknownSector.
const std::vector<std::string>& default_variables(const std::string& sector);

/// Ranks each regressor by R^2 against `<sector>.<outcome>`, descending,
/// ties by variable id. Throws UnknownSector or UnknownVariable.
SensitivityReport sensitivity_report(const mc::SampleMatrix& samples, const std::string& sector,
                                     const std::string& outcome = "bc_ratio",
                                     const std::optional<std::vector<std::string>>& variables = {});

}  // namespace vinechar::sense
