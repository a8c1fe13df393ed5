#include "vinechar/dist.hpp"

#include <cmath>
#include <string>

#include <fmt/core.h>

#include "vinechar/error.hpp"

namespace vinechar {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OrderingViolation: return "OrderingViolation";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::InvalidUniform: return "InvalidUniform";
    case ErrorKind::ZeroCostBase: return "ZeroCostBase";
    case ErrorKind::NoBracket: return "NoBracket";
    case ErrorKind::ZeroSequestration: return "ZeroSequestration";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::TooFew: return "TooFew";
    case ErrorKind::UnknownSector: return "UnknownSector";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

namespace dist {

void validate(const TriangularDist& d, std::string_view name) {
  const std::string label = name.empty() ? std::string("distribution") : std::string(name);
  if (!std::isfinite(d.low) || !std::isfinite(d.mode) || !std::isfinite(d.high)) {
    throw Error(ErrorKind::NonFinite, fmt::format("{}: non-finite bound", label));
  }
  if (d.mode < d.low) {
    throw Error(ErrorKind::OrderingViolation,
                fmt::format("{}: mode {} is below low {}", label, d.mode, d.low));
  }
  if (d.high < d.mode) {
    throw Error(ErrorKind::OrderingViolation,
                fmt::format("{}: high {} is below mode {}", label, d.high, d.mode));
  }
}

bool is_valid(const TriangularDist& d) noexcept {
  return std::isfinite(d.low) && std::isfinite(d.mode) && std::isfinite(d.high) &&
         d.low <= d.mode && d.mode <= d.high;
}

double mean(const TriangularDist& d) {
  if (d.degenerate()) return d.mode;
  return (d.low + d.mode + d.high) / 3.0;
}

double variance(const TriangularDist& d) {
  const double a = d.low, c = d.mode, b = d.high;
  return (a * a + b * b + c * c - a * b - a * c - b * c) / 18.0;
}

double cdf(const TriangularDist& d, double x) {
  if (x < d.low) return 0.0;
  if (x >= d.high) return 1.0;
  const double width = d.high - d.low;
  if (x <= d.mode) {
    return (x - d.low) * (x - d.low) / (width * (d.mode - d.low));
  }
  return 1.0 - (d.high - x) * (d.high - x) / (width * (d.high - d.mode));
}

double sample(const TriangularDist& d, double u) {
  if (!(u >= 0.0 && u < 1.0)) {
    throw Error(ErrorKind::InvalidUniform, fmt::format("uniform {} outside [0, 1)", u));
  }
  if (d.degenerate()) return d.mode;
  const double width = d.high - d.low;
  const double split = (d.mode - d.low) / width;
  if (u <= split) {
    return d.low + std::sqrt(u * width * (d.mode - d.low));
  }
  return d.high - std::sqrt((1.0 - u) * width * (d.high - d.mode));
}

}  // namespace dist
}  // namespace vinechar
