#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace vinechar::commands {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kModelError = 2,
  kUnknownSector = 3,
  kNoBracket = 4,
};

struct Options {
  std::filesystem::path scenario;
  std::filesystem::path out = ".";
  std::optional<std::size_t> iterations;  // overrides the scenario file
  std::optional<std::uint64_t> seed;
  int threads = 0;
  std::ostream* diag = nullptr;  // warnings and errors; the log stream when null
};

/// summary.json, sectors.csv, npv_range.csv, histogram_<sector>.csv,
/// samples.csv
int run(const Options& opts, std::ostream& log);

/// tornado_<sector>.csv
int sensitivity(const Options& opts, const std::string& sector, std::ostream& log);

/// breakeven.json; prints the price.
int breakeven(const Options& opts, const std::string& sector, std::ostream& log);

/// carbon.json
int carbon(const Options& opts, std::optional<double> offset_price,
           std::optional<double> target_cost, std::ostream& log);

}  // namespace vinechar::commands
