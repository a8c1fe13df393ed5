#pragma once

#include <string_view>

namespace vinechar::dist {

/// Three-point (low / mode / high) uncertainty estimate, modelled as a
/// triangular distribution.
struct TriangularDist {
  double low = 0.0;
  double mode = 0.0;
  double high = 0.0;

  static constexpr TriangularDist constant(double v) { return {v, v, v}; }

  bool degenerate() const { return low == high; }

  friend bool operator==(const TriangularDist&, const TriangularDist&) = default;
};

/// Throws Error{OrderingViolation} naming the offending bound, or
/// Error{NonFinite}. `name` is only used in the message.
void validate(const TriangularDist& d, std::string_view name = {});

bool is_valid(const TriangularDist& d) noexcept;

double mean(const TriangularDist& d);

double variance(const TriangularDist& d);

/// CDF evaluated at x.
double cdf(const TriangularDist& d, double x);

/// Inverse-CDF sample for u in [0, 1). Degenerate distributions return the
/// constant for any u.
double sample(const TriangularDist& d, double u);

}  // namespace vinechar::dist
