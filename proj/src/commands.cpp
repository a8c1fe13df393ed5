#include "vinechar/commands.hpp"

#include <algorithm>
#include <ostream>

#include <fmt/core.h>
#include <fmt/ostream.h>

#include "vinechar/error.hpp"
#include "vinechar/report.hpp"
#include "vinechar/scenario_io.hpp"
#include "vinechar/sense.hpp"

namespace vinechar::commands {

namespace fs = std::filesystem;

namespace {

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse: return kParseError;
    case ErrorKind::UnknownSector: return kUnknownSector;
    case ErrorKind::NoBracket: return kNoBracket;
    default: return kModelError;
  }
}

std::ostream& diag(const Options& opts, std::ostream& log) {
  return opts.diag ? *opts.diag : log;
}

template <class Body>
int guarded(const Options& opts, std::ostream& log, Body body) {
  try {
    return body();
  } catch (const Error& e) {
    fmt::print(diag(opts, log), "error: {}\n", e.what());
    return exit_code(e);
  } catch (const std::exception& e) {
    fmt::print(diag(opts, log), "error: {}\n", e.what());
    return kModelError;
  }
}

io::ScenarioFile load(const Options& opts, std::ostream& log) {
  io::ScenarioFile file = io::load_scenario(opts.scenario);
  if (opts.iterations) file.mc.iterations = *opts.iterations;
  if (opts.seed) file.mc.master_seed = *opts.seed;
  file.mc.threads = opts.threads;
  for (const auto& note : consistency_warnings(file.spec)) {
    fmt::print(diag(opts, log), "warning: {}\n", note);
  }
  return file;
}

void prepare(const fs::path& out) {
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw Error(ErrorKind::InvalidParameter, fmt::format("cannot create {}", out.string()));
}

void require_sector(const std::string& sector) {
  const auto& known = sense::sectors();
  if (std::find(known.begin(), known.end(), sector) == known.end()) {
    throw Error(ErrorKind::UnknownSector, fmt::format("unknown sector '{}'", sector));
  }
}

}  // namespace

int run(const Options& opts, std::ostream& log) {
  return guarded(opts, log, [&] {
    const auto file = load(opts, log);
    const auto result = mc::run(file.spec, file.mc);
    prepare(opts.out);
    const auto& s = result.summary;
    report::write_file(opts.out / "summary.json", report::summary_json(s));
    report::write_file(opts.out / "sectors.csv", report::sectors_csv(s));
    report::write_file(opts.out / "npv_range.csv", report::npv_range_csv(s));
    for (const char* sector : {"biochar", "vineyard", "winery", "chain"}) {
      report::write_file(opts.out / fmt::format("histogram_{}.csv", sector),
                         report::histogram_csv(s, sector));
    }
    report::write_file(opts.out / "samples.csv", report::samples_csv(result.samples));
    fmt::print(log, "{}: {} iterations, seed {}\n", s.scenario, s.iterations, s.master_seed);
    fmt::print(log, "{}", report::sectors_csv(s));
    return int{kOk};
  });
}

int sensitivity(const Options& opts, const std::string& sector, std::ostream& log) {
  return guarded(opts, log, [&] {
    require_sector(sector);
    const auto file = load(opts, log);
    const auto result = mc::run(file.spec, file.mc);
    const auto rep = sense::sensitivity_report(result.samples, sector);
    prepare(opts.out);
    const std::string csv = report::tornado_csv(rep);
    report::write_file(opts.out / fmt::format("tornado_{}.csv", sector), csv);
    fmt::print(log, "{}", csv);
    return int{kOk};
  });
}

int breakeven(const Options& opts, const std::string& sector, std::ostream& log) {
  return guarded(opts, log, [&] {
    if (sector != "biochar") {
      throw Error(ErrorKind::UnknownSector,
                  fmt::format("break-even is defined for the biochar sector, not '{}'", sector));
    }
    const auto file = load(opts, log);
    validate(file.spec);
    const auto b = chain::biochar_breakeven(file.spec);
    prepare(opts.out);
    report::write_file(opts.out / "breakeven.json", report::breakeven_json(file.spec.name, b));
    fmt::print(log, "break-even biochar price: {}{}\n", report::currency(b.price),
               b.degenerate ? " (degenerate: no costs)" : "");
    return int{kOk};
  });
}

int carbon(const Options& opts, std::optional<double> offset_price,
           std::optional<double> target_cost, std::ostream& log) {
  return guarded(opts, log, [&] {
    const auto file = load(opts, log);
    const auto result = mc::run(file.spec, file.mc);
    const auto c = report::carbon_report(file.spec, result, offset_price, target_cost);
    prepare(opts.out);
    const std::string json = report::carbon_json(c);
    report::write_file(opts.out / "carbon.json", json);
    fmt::print(log, "{}", json);
    return int{kOk};
  });
}

}  // namespace vinechar::commands
