#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "vinechar/commands.hpp"

namespace cmd = vinechar::commands;

namespace {

void add_common(CLI::App* sub, cmd::Options& opts, std::size_t& iterations,
                std::uint64_t& seed) {
  sub->add_option("scenario", opts.scenario, "Scenario file (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("-n,--iterations", iterations, "Monte Carlo iterations")
      ->check(CLI::PositiveNumber);
  sub->add_option("-s,--seed", seed, "Master seed");
  sub->add_option("-o,--out", opts.out, "Output directory")->capture_default_str();
  sub->add_option("-j,--threads", opts.threads, "Worker threads (0: OpenMP default)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vinechar: Monte Carlo benefit-cost model of a wine-industry biochar value chain"};
  app.require_subcommand(1);

  cmd::Options opts;
  std::size_t iterations = 0;
  std::uint64_t seed = 0;
  std::string sector = "biochar";
  double offset_price = 0.0;
  double target_cost = 0.0;

  auto* run = app.add_subcommand("run", "Simulate and write summary, sector and histogram tables");
  add_common(run, opts, iterations, seed);

  auto* sens = app.add_subcommand("sensitivity", "Write the R^2 tornado table for one sector");
  add_common(sens, opts, iterations, seed);
  sens->add_option("--sector", sector, "biochar | vineyard | winery")->required();

  auto* be = app.add_subcommand("breakeven", "Solve the base-value break-even biochar price");
  add_common(be, opts, iterations, seed);
  be->add_option("--sector", sector, "Only biochar is supported")->capture_default_str();

  auto* carbon = app.add_subcommand("carbon", "Carbon sequestration and offset accounting");
  add_common(carbon, opts, iterations, seed);
  auto* price_opt = carbon->add_option("--offset-price", offset_price, "Offset price, $/t CO2")
                        ->check(CLI::NonNegativeNumber);
  auto* target_opt = carbon->add_option(
      "--target-cost", target_cost,
      "Solve for the agricultural benefit that yields this sequestration cost, $/t CO2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; anything else is a usage error
    return app.exit(e) == 0 ? 0 : cmd::kParseError;
  }
  opts.diag = &std::cerr;

  for (auto* sub : {run, sens, be, carbon}) {
    if (!sub->parsed()) continue;
    if (sub->count("--iterations")) opts.iterations = iterations;
    if (sub->count("--seed")) opts.seed = seed;
  }

  if (run->parsed()) return cmd::run(opts, std::cout);
  if (sens->parsed()) return cmd::sensitivity(opts, sector, std::cout);
  if (be->parsed()) return cmd::breakeven(opts, sector, std::cout);
  std::optional<double> price;
  std::optional<double> target;
  if (*price_opt) price = offset_price;
  if (*target_opt) target = target_cost;
  return cmd::carbon(opts, price, target, std::cout);
}
