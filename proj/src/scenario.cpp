#include "opsem/scenario.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace opsem {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& field, const std::string& message) {
  throw Error(ErrorCode::ValidationError, field + ": " + message);
}

void reject_unknown_keys(const json& obj, const std::string& field,
                         std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) invalid(field.empty() ? key : field + "." + key, "unknown key");
  }
}

const json& require_object(const json& j, const std::string& field) {
  if (!j.is_object()) invalid(field, "expected an object");
  return j;
}

const json& require_key(const json& obj, const std::string& field, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) invalid(field.empty() ? key : field + "." + key, "missing");
  return *it;
}

std::uint64_t require_uint(const json& j, const std::string& field) {
  if (!j.is_number_unsigned()) invalid(field, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

std::string require_string(const json& j, const std::string& field) {
  if (!j.is_string()) invalid(field, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> unique_labels(const json& j, const std::string& field) {
  if (!j.is_array()) invalid(field, "expected an array of strings");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto label = require_string(j[i], field + "[" + std::to_string(i) + "]");
    if (!seen.insert(label).second) {
      invalid(field + "[" + std::to_string(i) + "]", "duplicate label '" + label + "'");
    }
    out.push_back(std::move(label));
  }
  return out;
}

std::vector<std::uint32_t> parse_table(const json& j, const std::string& field,
                                       const RepCapacity& capacity) {
  if (!j.is_array()) invalid(field, "expected an image table");
  if (j.size() != capacity.size()) {
    invalid(field, "table has " + std::to_string(j.size()) + " entries, capacity is " +
                       std::to_string(capacity.size()));
  }
  std::vector<std::uint32_t> out;
  for (std::size_t s = 0; s < j.size(); ++s) {
    const auto cell = field + "[" + std::to_string(s) + "]";
    if (j[s].is_string()) {
      auto found = capacity.find(j[s].get<std::string>());
      if (!found) invalid(cell, "unknown state label '" + j[s].get<std::string>() + "'");
      out.push_back(found->index);
      continue;
    }
    auto v = require_uint(j[s], cell);
    if (v >= capacity.size()) {
      invalid(cell, "state index " + std::to_string(v) + " out of range for capacity " +
                        std::to_string(capacity.size()));
    }
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

TableRows parse_tables(const json& j, const std::string& field, const RepCapacity& capacity) {
  if (!j.is_array()) invalid(field, "expected an array of image tables");
  TableRows out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(parse_table(j[i], field + "[" + std::to_string(i) + "]", capacity));
  }
  return out;
}

OperatorTable as_table(const std::vector<std::uint32_t>& row) {
  return OperatorTable::from_indices(row);
}

std::string parse_error_locator(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return std::to_string(line) + ":" + std::to_string(column);
}

}  // namespace

RepCapacity scenario_capacity(const Scenario& scenario) {
  return RepCapacity(scenario.capacity_size, scenario.capacity_labels);
}

OperatorFamily scenario_family(const Scenario& scenario) {
  OperatorFamily family{scenario.family, {}};
  for (const auto& row : scenario.family_tables) family.tables.push_back(as_table(row));
  return family;
}

Scenario parse_scenario(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "malformed scenario JSON at " +
                                           parse_error_locator(text, e.byte) + ": " +
                                           e.what());
  }
  require_object(root, "scenario");
  reject_unknown_keys(root, "", {"capacity", "signals", "family", "truth", "strategy",
                                 "max_steps", "population", "limits"});

  Scenario sc;

  const auto& cap = require_object(require_key(root, "", "capacity"), "capacity");
  reject_unknown_keys(cap, "capacity", {"size", "labels"});
  const auto size = require_uint(require_key(cap, "capacity", "size"), "capacity.size");
  if (size == 0) invalid("capacity.size", "must be at least 1");
  if (size > std::numeric_limits<std::uint32_t>::max()) invalid("capacity.size", "too large");
  sc.capacity_size = static_cast<std::size_t>(size);
  if (auto it = cap.find("labels"); it != cap.end()) {
    sc.capacity_labels = unique_labels(*it, "capacity.labels");
    if (sc.capacity_labels.size() != sc.capacity_size) {
      invalid("capacity.labels", "expected " + std::to_string(sc.capacity_size) +
                                     " labels, got " +
                                     std::to_string(sc.capacity_labels.size()));
    }
  }
  const auto capacity = scenario_capacity(sc);

  sc.signals = unique_labels(require_key(root, "", "signals"), "signals");
  if (sc.signals.empty()) invalid("signals", "language needs at least one signal");

  const auto& fam = require_object(require_key(root, "", "family"), "family");
  reject_unknown_keys(fam, "family", {"kind", "tables"});
  const auto kind_name = require_string(require_key(fam, "family", "kind"), "family.kind");
  auto kind = parse_family_kind(kind_name);
  if (!kind) invalid("family.kind", "unknown operator family '" + kind_name + "'");
  sc.family = *kind;
  if (auto it = fam.find("tables"); it != fam.end()) {
    if (sc.family != FamilyKind::ExplicitList) {
      invalid("family.tables", "only allowed for the explicit-list family");
    }
    sc.family_tables = parse_tables(*it, "family.tables", capacity);
    std::set<std::vector<std::uint32_t>> seen;
    for (std::size_t i = 0; i < sc.family_tables.size(); ++i) {
      if (!seen.insert(sc.family_tables[i]).second) {
        invalid("family.tables[" + std::to_string(i) + "]", "duplicate operator");
      }
    }
  }
  if (sc.family == FamilyKind::ExplicitList && sc.family_tables.empty()) {
    invalid("family.tables", "explicit-list family needs at least one table");
  }

  const auto& strat = require_object(require_key(root, "", "strategy"), "strategy");
  reject_unknown_keys(strat, "strategy", {"kind", "seed"});
  const auto strat_name =
      require_string(require_key(strat, "strategy", "kind"), "strategy.kind");
  auto strat_kind = parse_strategy_kind(strat_name);
  if (!strat_kind) invalid("strategy.kind", "unknown strategy '" + strat_name + "'");
  sc.strategy.kind = *strat_kind;
  if (auto it = strat.find("seed"); it != strat.end()) {
    sc.strategy.seed = require_uint(*it, "strategy.seed");
  }

  sc.max_steps = static_cast<std::size_t>(
      require_uint(require_key(root, "", "max_steps"), "max_steps"));

  if (auto it = root.find("population"); it != root.end()) {
    const auto& pop = require_object(*it, "population");
    reject_unknown_keys(pop, "population", {"learners", "generator", "max_rounds"});
    PopulationSpec spec;
    spec.learners = static_cast<std::size_t>(
        require_uint(require_key(pop, "population", "learners"), "population.learners"));
    if (spec.learners == 0) invalid("population.learners", "must be at least 1");
    const auto gen_name = require_string(require_key(pop, "population", "generator"),
                                         "population.generator");
    auto gen = parse_interaction_generator(gen_name);
    if (!gen) invalid("population.generator", "unknown generator '" + gen_name + "'");
    spec.generator = *gen;
    spec.max_rounds = static_cast<std::size_t>(require_uint(
        require_key(pop, "population", "max_rounds"), "population.max_rounds"));
    sc.population = spec;
  }

  if (auto it = root.find("limits"); it != root.end()) {
    const auto& lim = require_object(*it, "limits");
    reject_unknown_keys(lim, "limits", {"max_space"});
    if (auto m = lim.find("max_space"); m != lim.end()) {
      sc.max_space = require_uint(*m, "limits.max_space");
      if (*sc.max_space == 0) invalid("limits.max_space", "must be at least 1");
    }
  }

  const auto family = scenario_family(sc);
  const auto projected = projected_space_size(family, sc.capacity_size, sc.signals.size());
  if (projected > sc.space_limit()) {
    throw Error(ErrorCode::SpaceTooLarge,
                "scenario space of " + std::to_string(projected) +
                    " members exceeds the limit of " + std::to_string(sc.space_limit()));
  }

  const auto& truth = require_object(require_key(root, "", "truth"), "truth");
  reject_unknown_keys(truth, "truth", {"tables", "index"});
  const bool has_tables = truth.contains("tables");
  const bool has_index = truth.contains("index");
  if (has_tables == has_index) invalid("truth", "give exactly one of 'tables' or 'index'");
  if (has_tables) {
    auto rows = parse_tables(truth["tables"], "truth.tables", capacity);
    if (rows.size() != sc.signals.size()) {
      invalid("truth.tables", "expected one table per signal (" +
                                  std::to_string(sc.signals.size()) + "), got " +
                                  std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (!family_contains(family, as_table(rows[j]), sc.capacity_size)) {
        invalid("truth.tables[" + std::to_string(j) + "]",
                "operator is not in the " + std::string(to_string(sc.family)) +
                    " family");
      }
    }
    sc.truth = std::move(rows);
  } else {
    const auto index = require_uint(truth["index"], "truth.index");
    if (index >= projected) {
      invalid("truth.index", "index " + std::to_string(index) + " outside space of " +
                                 std::to_string(projected) + " members");
    }
    sc.truth = index;
  }

  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read scenario " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string write_scenario(const Scenario& sc) {
  nlohmann::ordered_json root;
  root["capacity"]["size"] = sc.capacity_size;
  if (!sc.capacity_labels.empty()) root["capacity"]["labels"] = sc.capacity_labels;
  root["signals"] = sc.signals;
  root["family"]["kind"] = to_string(sc.family);
  if (!sc.family_tables.empty()) root["family"]["tables"] = sc.family_tables;
  if (const auto* rows = std::get_if<TableRows>(&sc.truth)) {
    root["truth"]["tables"] = *rows;
  } else {
    root["truth"]["index"] = std::get<std::uint64_t>(sc.truth);
  }
  root["strategy"]["kind"] = to_string(sc.strategy.kind);
  root["strategy"]["seed"] = sc.strategy.seed;
  root["max_steps"] = sc.max_steps;
  if (sc.population) {
    root["population"]["learners"] = sc.population->learners;
    root["population"]["generator"] = to_string(sc.population->generator);
    root["population"]["max_rounds"] = sc.population->max_rounds;
  }
  if (sc.max_space) root["limits"]["max_space"] = *sc.max_space;
  return root.dump(2) + "\n";
}

ResolvedScenario resolve(const Scenario& sc) {
  auto space = enumerate_space(scenario_capacity(sc), Language(sc.signals),
                               scenario_family(sc), sc.space_limit());
  InterpretationId truth = 0;
  if (const auto* rows = std::get_if<TableRows>(&sc.truth)) {
    std::vector<OperatorTable> tables;
    for (const auto& row : *rows) tables.push_back(as_table(row));
    auto id = space.find(tables);
    if (!id) invalid("truth.tables", "not a member of the interpretation space");
    truth = *id;
  } else {
    const auto index = std::get<std::uint64_t>(sc.truth);
    if (index >= space.size()) invalid("truth.index", "outside the interpretation space");
    truth = static_cast<InterpretationId>(index);
  }
  return ResolvedScenario{std::move(space), truth};
}

}  // namespace opsem
