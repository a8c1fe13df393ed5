#include <fmt/core.h>

#include "vinechar/error.hpp"
#include "vinechar/mc.hpp"

namespace vinechar::mc {

std::vector<IterationRecord> evaluate_iterations_serial(const ScenarioSpec& spec,
                                                        const McConfig& cfg) {
  const DrawSampler sampler(spec);
  const dist::SampleStream stream(cfg.master_seed);
  std::vector<IterationRecord> records;
  records.reserve(cfg.iterations);
  for (std::uint64_t i = 0; i < cfg.iterations; ++i) {
    try {
      records.push_back(evaluate_iteration(spec, sampler, stream, i));
    } catch (const Error& e) {
      throw Error(e.kind(), fmt::format("iteration {}: {}", i, e.what()));
    }
  }
  return records;
}

McResult run_serial(const ScenarioSpec& spec, const McConfig& cfg) {
  validate(spec);
  validate(cfg);
  return collect(spec, cfg, evaluate_iterations_serial(spec, cfg));
}

}  // namespace vinechar::mc
