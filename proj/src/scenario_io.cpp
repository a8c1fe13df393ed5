#include "vinechar/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/core.h>
#include <json.hpp>

#include "vinechar/error.hpp"

namespace vinechar::io {

using nlohmann::json;

namespace {

class Reader {
 public:
  explicit Reader(std::string_view source) : source_(source) {}

  [[noreturn]] void fail(const std::string& pointer, const std::string& message,
                         ErrorKind kind = ErrorKind::Parse) const {
    throw Error(kind, fmt::format("{}: {}: {}", source_, pointer.empty() ? "/" : pointer, message));
  }

  const json& object(const json& parent, const std::string& pointer, const char* key,
                     std::set<std::string>& seen) const {
    seen.insert(key);
    const std::string here = pointer + "/" + key;
    if (!parent.contains(key)) fail(here, "missing section");
    const json& v = parent.at(key);
    if (!v.is_object()) fail(here, "expected an object");
    return v;
  }

  double number(const json& parent, const std::string& pointer, const char* key,
                std::set<std::string>& seen) const {
    seen.insert(key);
    const std::string here = pointer + "/" + key;
    if (!parent.contains(key)) fail(here, "missing value");
    const json& v = parent.at(key);
    if (!v.is_number()) fail(here, "expected a number");
    return v.get<double>();
  }

  double optional_number(const json& parent, const std::string& pointer, const char* key,
                         std::set<std::string>& seen, double fallback) const {
    if (!parent.contains(key)) {
      seen.insert(key);
      return fallback;
    }
    return number(parent, pointer, key, seen);
  }

  template <class Int>
  Int integer(const json& parent, const std::string& pointer, const char* key,
              std::set<std::string>& seen) const {
    seen.insert(key);
    const std::string here = pointer + "/" + key;
    if (!parent.contains(key)) fail(here, "missing value");
    const json& v = parent.at(key);
    if (!v.is_number_integer()) fail(here, "expected an integer");
    if (v.is_number_unsigned()) return static_cast<Int>(v.get<std::uint64_t>());
    const auto raw = v.get<std::int64_t>();
    if (raw < 0) fail(here, "expected a non-negative integer");
    return static_cast<Int>(raw);
  }

  std::string string(const json& parent, const std::string& pointer, const char* key,
                     std::set<std::string>& seen) const {
    seen.insert(key);
    const std::string here = pointer + "/" + key;
    if (!parent.contains(key)) fail(here, "missing value");
    const json& v = parent.at(key);
    if (!v.is_string()) fail(here, "expected a string");
    return v.get<std::string>();
  }

  TriangularDist distribution(const json& parent, const std::string& pointer, const char* key,
                              std::set<std::string>& seen) const {
    seen.insert(key);
    const std::string here = pointer + "/" + key;
    if (!parent.contains(key)) fail(here, "missing variable");
    const json& v = parent.at(key);
    if (v.is_number()) return TriangularDist::constant(v.get<double>());
    if (!v.is_object()) fail(here, "expected {\"low\", \"mode\", \"high\"} or a number");
    std::set<std::string> inner;
    TriangularDist d{number(v, here, "low", inner), number(v, here, "mode", inner),
                     number(v, here, "high", inner)};
    reject_unknown(v, here, inner);
    try {
      dist::validate(d);
    } catch (const Error& e) {
      fail(here, e.what(), e.kind());
    }
    return d;
  }

  void reject_unknown(const json& obj, const std::string& pointer,
                      const std::set<std::string>& seen) const {
    for (const auto& item : obj.items()) {
      if (!seen.count(item.key())) fail(pointer + "/" + item.key(), "unknown key");
    }
  }

  template <class Fields>
  void table(const json& root, const char* section, Fields& fields,
             std::set<std::string>& seen_root,
             const std::vector<const char*>& extra_scalars = {}) const {
    const std::string here = std::string("/") + section;
    const json& obj = object(root, "", section, seen_root);
    std::set<std::string> seen;
    Fields::visit(fields, [&](const char* name, TriangularDist& d) {
      d = distribution(obj, here, name, seen);
    });
    for (const char* s : extra_scalars) seen.insert(s);
    reject_unknown(obj, here, seen);
  }

 private:
  std::string source_;
};

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::size_t column_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  const auto nl = text.rfind('\n', byte == 0 ? 0 : byte - 1);
  return nl == std::string_view::npos ? byte : byte - nl - 1;
}

}  // namespace

ScenarioFile parse_scenario(std::string_view text, std::string_view source) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(ErrorKind::Parse, fmt::format("{}:{}:{}: {}", source, line_of(text, byte),
                                              column_of(text, byte) + 1, e.what()));
  }
  const Reader rd(source);
  if (!root.is_object()) rd.fail("", "expected a JSON object at top level");

  ScenarioFile file;
  ScenarioSpec& spec = file.spec;
  std::set<std::string> seen;

  spec.name = rd.string(root, "", "name", seen);
  const std::string kind = rd.string(root, "", "kind", seen);
  if (kind == "independent") {
    spec.kind = ScenarioKind::Independent;
  } else if (kind == "integrated") {
    spec.kind = ScenarioKind::Integrated;
  } else {
    rd.fail("/kind", fmt::format("expected \"independent\" or \"integrated\", got \"{}\"", kind));
  }

  seen.insert("vineyard_biochar_cost");
  if (root.contains("vineyard_biochar_cost")) {
    const std::string conv = rd.string(root, "", "vineyard_biochar_cost", seen);
    if (conv == "excluded") {
      spec.vineyard_biochar_cost = VineyardBiocharCost::Excluded;
    } else if (conv == "amortized") {
      spec.vineyard_biochar_cost = VineyardBiocharCost::Amortized;
    } else {
      rd.fail("/vineyard_biochar_cost",
              fmt::format("expected \"excluded\" or \"amortized\", got \"{}\"", conv));
    }
  }

  {
    const json& f = rd.object(root, "", "finance", seen);
    std::set<std::string> s;
    spec.finance.discount_rate = rd.number(f, "/finance", "discount_rate", s);
    spec.finance.horizon_years = rd.integer<int>(f, "/finance", "horizon_years", s);
    spec.finance.equipment_life_years = rd.integer<int>(f, "/finance", "equipment_life_years", s);
    rd.reject_unknown(f, "/finance", s);
  }

  seen.insert("monte_carlo");
  if (root.contains("monte_carlo")) {
    const json& m = rd.object(root, "", "monte_carlo", seen);
    std::set<std::string> s;
    file.mc.iterations = rd.integer<std::size_t>(m, "/monte_carlo", "iterations", s);
    file.mc.master_seed = rd.integer<std::uint64_t>(m, "/monte_carlo", "seed", s);
    file.mc.histogram_bins = rd.integer<int>(m, "/monte_carlo", "histogram_bins", s);
    rd.reject_unknown(m, "/monte_carlo", s);
  }

  rd.table(root, "biochar", spec.biochar, seen);
  rd.table(root, "vineyard", spec.vineyard, seen);
  rd.table(root, "winery", spec.winery, seen);
  rd.table(root, "carbon", spec.carbon, seen,
           {"ag_benefit_per_t_co2", "coproduct_benefit_per_t_co2"});
  {
    const json& c = root.at("carbon");
    std::set<std::string> s;
    spec.ag_benefit_per_t_co2 = rd.optional_number(c, "/carbon", "ag_benefit_per_t_co2", s, 0.0);
    spec.coproduct_benefit_per_t_co2 =
        rd.optional_number(c, "/carbon", "coproduct_benefit_per_t_co2", s, 0.0);
  }
  rd.reject_unknown(root, "", seen);

  try {
    validate(spec);
    mc::validate(file.mc);
  } catch (const Error& e) {
    // well-formed but invalid values are model errors, not syntax
    rd.fail("", e.what(), e.kind());
  }
  return file;
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, fmt::format("{}: cannot open file", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str(), path.string());
}

namespace {

using ordered = nlohmann::ordered_json;

ordered dist_json(const TriangularDist& d) {
  if (d.degenerate()) return d.mode;
  return ordered{{"low", d.low}, {"mode", d.mode}, {"high", d.high}};
}

template <class Fields>
ordered table_json(const Fields& fields) {
  ordered obj = ordered::object();
  Fields::visit(fields, [&](const char* name, const TriangularDist& d) { obj[name] = dist_json(d); });
  return obj;
}

}  // namespace

std::string serialize_scenario(const ScenarioFile& file) {
  const ScenarioSpec& spec = file.spec;
  ordered root;
  root["name"] = spec.name;
  root["kind"] = std::string(to_string(spec.kind));
  root["vineyard_biochar_cost"] = std::string(to_string(spec.vineyard_biochar_cost));
  root["finance"] = {{"discount_rate", spec.finance.discount_rate},
                     {"horizon_years", spec.finance.horizon_years},
                     {"equipment_life_years", spec.finance.equipment_life_years}};
  root["monte_carlo"] = {{"iterations", file.mc.iterations},
                         {"seed", file.mc.master_seed},
                         {"histogram_bins", file.mc.histogram_bins}};
  root["biochar"] = table_json(spec.biochar);
  root["vineyard"] = table_json(spec.vineyard);
  root["winery"] = table_json(spec.winery);
  ordered carbon = table_json(spec.carbon);
  carbon["ag_benefit_per_t_co2"] = spec.ag_benefit_per_t_co2;
  carbon["coproduct_benefit_per_t_co2"] = spec.coproduct_benefit_per_t_co2;
  root["carbon"] = carbon;
  return root.dump(2) + "\n";
}

}  // namespace vinechar::io
