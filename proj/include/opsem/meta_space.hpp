#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "opsem/core.hpp"

namespace opsem {

enum class FamilyKind { AllFunctions, Permutations, Constants, ExplicitList };

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view name);

/// Restricts which operators a single signal may denote. `tables` is only
/// used by ExplicitList.
struct OperatorFamily {
  FamilyKind kind = FamilyKind::AllFunctions;
  std::vector<OperatorTable> tables;

  static OperatorFamily all_functions() { return {FamilyKind::AllFunctions, {}}; }
  static OperatorFamily permutations() { return {FamilyKind::Permutations, {}}; }
  static OperatorFamily constants() { return {FamilyKind::Constants, {}}; }
  static OperatorFamily explicit_list(std::vector<OperatorTable> tables) {
    return {FamilyKind::ExplicitList, std::move(tables)};
  }

  friend bool operator==(const OperatorFamily&, const OperatorFamily&) = default;
};

bool family_contains(const OperatorFamily& family, const OperatorTable& table,
                     std::size_t capacity_size);

/// Number of operators the family allows per signal; saturates at UINT64_MAX.
std::uint64_t family_operator_count(const OperatorFamily& family,
                                    std::size_t capacity_size);

/// family_operator_count ^ language_size, saturating at UINT64_MAX.
std::uint64_t projected_space_size(const OperatorFamily& family,
                                   std::size_t capacity_size,
                                   std::size_t language_size);

inline constexpr std::uint64_t kDefaultSpaceLimit = 1'000'000;

/// An experiment: put the exchange in context `state` and emit `signal`.
/// Ordered lexicographically by (state, signal).
struct Query {
  StateId state;
  Signal signal;
  friend auto operator<=>(const Query&, const Query&) = default;
};

/// Evidence from one interaction: `signal` moved `pre` to `post`.
struct Observation {
  StateId pre;
  Signal signal;
  StateId post;
  friend auto operator<=>(const Observation&, const Observation&) = default;
};

/// Sorted, duplicate-free set of states.
using StateSet = std::vector<StateId>;

/// The set of all interpretations under a family, in lexicographic order of
/// their concatenated image tables. Members are never stored individually: a
/// member id is a mixed-radix number whose digits (signal 0 most significant)
/// index the per-signal operator list.
class InterpretationSpace {
 public:
  const RepCapacity& capacity() const noexcept { return capacity_; }
  const Language& language() const noexcept { return language_; }
  const OperatorFamily& family() const noexcept { return family_; }
  std::size_t size() const noexcept { return size_; }
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  /// Per-signal operators in enumeration order.
  const std::vector<OperatorTable>& operators() const noexcept { return operators_; }

  /// All (state, signal) pairs in lexicographic order.
  std::vector<Query> all_queries() const;

  Interpretation member(InterpretationId id) const;
  std::optional<InterpretationId> find(std::span<const OperatorTable> tables) const;

  /// Image of `state` under member `id`'s operator for `signal`.
  StateId image(InterpretationId id, Signal signal, StateId state) const;

  void check_member(InterpretationId id) const;
  void check_query(Signal signal, StateId state) const;

 private:
  friend InterpretationSpace enumerate_space(RepCapacity, Language, OperatorFamily,
                                             std::uint64_t);
  InterpretationSpace(RepCapacity capacity, Language language, OperatorFamily family);

  std::size_t operator_index(InterpretationId id, Signal signal) const {
    return (id / strides_[signal.index]) % operators_.size();
  }

  RepCapacity capacity_;
  Language language_;
  OperatorFamily family_;
  std::vector<OperatorTable> operators_;
  std::vector<std::uint64_t> strides_;
  std::size_t size_ = 0;
  std::uint64_t fingerprint_ = 0;
};

/// Throws SpaceTooLarge when the projected member count exceeds `limit`.
InterpretationSpace enumerate_space(RepCapacity capacity, Language language,
                                    OperatorFamily family,
                                    std::uint64_t limit = kDefaultSpaceLimit);

/// A nonempty set of candidate interpretations still consistent with the
/// evidence. Candidates are kept sorted and unique.
class MetaState {
 public:
  MetaState(const InterpretationSpace& space, std::vector<InterpretationId> candidates);

  std::uint64_t space_fingerprint() const noexcept { return space_fingerprint_; }
  const std::vector<InterpretationId>& candidates() const noexcept { return candidates_; }
  std::size_t size() const noexcept { return candidates_.size(); }
  bool contains(InterpretationId id) const;

  friend bool operator==(const MetaState&, const MetaState&) = default;

 private:
  MetaState() = default;
  friend MetaState refine(const InterpretationSpace&, const MetaState&, const Observation&);

  std::uint64_t space_fingerprint_ = 0;
  std::vector<InterpretationId> candidates_;
};

/// Total ignorance: every member of the space.
MetaState initial_meta_state(const InterpretationSpace& space);

/// Keep the candidates whose operator maps obs.pre to obs.post under
/// obs.signal. Throws ContradictoryEvidence instead of returning an empty set.
MetaState refine(const InterpretationSpace& space, const MetaState& meta,
                 const Observation& obs);

/// Union of candidate images of `state` under `signal`.
StateSet partial_operator(const InterpretationSpace& space, const MetaState& meta,
                          Signal signal, StateId state);

/// log2 of the candidate count, in bits.
double entropy(const MetaState& meta);

bool is_perfect_information(const MetaState& meta);

/// True when the candidates disagree on the query's outcome.
bool is_informative(const InterpretationSpace& space, const MetaState& meta,
                    const Query& query);

/// Candidates surviving each possible outcome of `query`, indexed by the
/// outcome state.
std::vector<std::size_t> outcome_counts(const InterpretationSpace& space,
                                        const MetaState& meta, const Query& query);

using Partition = std::vector<std::vector<InterpretationId>>;

/// Group members by their responses to `queries`. Classes are ordered by
/// their smallest member.
Partition indistinguishable_classes(const InterpretationSpace& space,
                                    std::span<const Query> queries);

}  // namespace opsem
