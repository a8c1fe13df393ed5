// Serial reference vs OpenMP kernel over Monte Carlo iterations.
//
//   bench_mc [scenario.json] [iterations] [threads]

#include <chrono>
#include <cstdlib>
#include <string>

#include <fmt/core.h>
#include <omp.h>

#include "vinechar/mc.hpp"
#include "vinechar/scenario_io.hpp"

using namespace vinechar;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same(const std::vector<mc::IterationRecord>& a, const std::vector<mc::IterationRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].result.biochar.npv != b[i].result.biochar.npv ||
        a[i].result.vineyard.bc_ratio != b[i].result.vineyard.bc_ratio ||
        a[i].result.winery.npv != b[i].result.winery.npv ||
        a[i].sequestration_cost != b[i].sequestration_cost) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string path =
      argc > 1 ? argv[1] : std::string(VINECHAR_SCENARIO_DIR) + "/independent.json";
  const auto file = io::load_scenario(path);
  mc::McConfig cfg = file.mc;
  cfg.iterations = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 200000;
  cfg.threads = argc > 3 ? std::atoi(argv[3]) : omp_get_max_threads();

  std::vector<mc::IterationRecord> serial, parallel;
  const double t_serial = seconds([&] { serial = mc::evaluate_iterations_serial(file.spec, cfg); });
  const double t_parallel = seconds([&] { parallel = mc::evaluate_iterations(file.spec, cfg); });
  const double t_collect = seconds([&] { (void)mc::collect(file.spec, cfg, parallel); });

  fmt::print("scenario      {}\n", file.spec.name);
  fmt::print("iterations    {}\n", cfg.iterations);
  fmt::print("threads       {}\n", cfg.threads);
  fmt::print("serial        {:.4f} s  ({:.0f} it/s)\n", t_serial, cfg.iterations / t_serial);
  fmt::print("openmp        {:.4f} s  ({:.0f} it/s)\n", t_parallel, cfg.iterations / t_parallel);
  fmt::print("speedup       {:.2f}x\n", t_serial / t_parallel);
  fmt::print("collect       {:.4f} s\n", t_collect);
  const bool identical = same(serial, parallel);
  fmt::print("identical     {}\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
