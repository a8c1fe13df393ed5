#pragma once

#include <cstdint>
#include <string_view>

namespace vinechar::dist {

/// Counter-based uniform source. The value for a (seed, iteration, variable)
/// triple never depends on evaluation order, so iterations can be evaluated
/// by any number of workers and adding a variable leaves the others' draws
/// untouched.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t master_seed) : seed_(master_seed) {}

  std::uint64_t master_seed() const { return seed_; }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform(std::uint64_t iteration, std::string_view variable_id) const;

  /// Same, keyed by a precomputed variable hash (see variable_key).
  double uniform(std::uint64_t iteration, std::uint64_t variable_key) const;

  static std::uint64_t variable_key(std::string_view variable_id);

 private:
  std::uint64_t seed_;
};

}  // namespace vinechar::dist
