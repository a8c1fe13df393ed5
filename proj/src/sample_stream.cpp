#include "vinechar/sample_stream.hpp"

namespace vinechar::dist {

namespace {

// splitmix64 finalizer
constexpr std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SampleStream::variable_key(std::string_view variable_id) {
  // FNV-1a, 64 bit
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : variable_id) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

double SampleStream::uniform(std::uint64_t iteration, std::uint64_t variable_key) const {
  const std::uint64_t bits = mix(mix(mix(seed_) ^ iteration) ^ variable_key);
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

double SampleStream::uniform(std::uint64_t iteration, std::string_view variable_id) const {
  return uniform(iteration, variable_key(variable_id));
}

}  // namespace vinechar::dist
