#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "opsem/learning.hpp"

namespace opsem {

using TableRows = std::vector<std::vector<std::uint32_t>>;

struct PopulationSpec {
  std::size_t learners = 1;
  InteractionGenerator generator = InteractionGenerator::RoundRobin;
  std::size_t max_rounds = 0;
  friend bool operator==(const PopulationSpec&, const PopulationSpec&) = default;
};

/// A validated experiment definition. Tables are stored as state indices;
/// labels in the source file are resolved at load time.
struct Scenario {
  std::size_t capacity_size = 1;
  std::vector<std::string> capacity_labels;
  std::vector<std::string> signals;
  FamilyKind family = FamilyKind::AllFunctions;
  TableRows family_tables;
  /// Explicit per-signal tables, or an index into the enumerated space.
  std::variant<TableRows, std::uint64_t> truth = std::uint64_t{0};
  QueryStrategy strategy;
  std::size_t max_steps = 0;
  std::optional<PopulationSpec> population;
  std::optional<std::uint64_t> max_space;

  std::uint64_t space_limit() const { return max_space.value_or(kDefaultSpaceLimit); }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Parse and validate scenario JSON. Malformed JSON raises ParseError with a
/// line:column locator; schema and consistency problems raise ValidationError
/// naming the offending field. A space larger than the limit raises
/// SpaceTooLarge.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

/// Canonical JSON form, accepted back by parse_scenario.
std::string write_scenario(const Scenario& scenario);

RepCapacity scenario_capacity(const Scenario& scenario);
OperatorFamily scenario_family(const Scenario& scenario);

struct ResolvedScenario {
  InterpretationSpace space;
  InterpretationId truth;
};

ResolvedScenario resolve(const Scenario& scenario);

}  // namespace opsem
