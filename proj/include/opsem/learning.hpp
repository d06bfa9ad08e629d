#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "opsem/meta_space.hpp"

namespace opsem {

/// SplitMix64: a counter-based generator whose stream depends only on the
/// seed, identically on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;
  /// Uniform integer in [0, bound). Unbiased; bound must be nonzero.
  std::uint64_t uniform(std::uint64_t bound) noexcept;

  static std::uint64_t mix(std::uint64_t z) noexcept;

 private:
  std::uint64_t state_;
};

/// Independent stream seed for learner `index` under a population seed.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) noexcept;

enum class StrategyKind { Sweep, GreedySplit, Random };

std::string_view to_string(StrategyKind kind);
std::optional<StrategyKind> parse_strategy_kind(std::string_view name);

struct QueryStrategy {
  StrategyKind kind = StrategyKind::Sweep;
  std::uint64_t seed = 0;  // read by Random only
  friend bool operator==(const QueryStrategy&, const QueryStrategy&) = default;
};

Observation generate_observation(const Interpretation& truth, const Query& query);

/// Choose the next experiment. Queries in `asked` are never re-chosen.
/// Throws NoInformativeQuery when no remaining query splits `meta`.
Query select_query(const QueryStrategy& strategy, const InterpretationSpace& space,
                   const MetaState& meta, const std::set<Query>& asked,
                   SplitMix64& rng);

struct HistoryStep {
  std::size_t step_index = 0;  // 1-based
  Query query;
  Observation observation;
  std::size_t candidates_after = 0;
  double entropy_after = 0.0;
  friend bool operator==(const HistoryStep&, const HistoryStep&) = default;
};

struct History {
  std::size_t initial_candidates = 0;
  std::vector<HistoryStep> steps;
  bool converged = false;
  std::vector<InterpretationId> final_candidates;

  /// Candidate counts: initial followed by the count after each step.
  std::vector<std::size_t> candidate_trace() const;

  friend bool operator==(const History&, const History&) = default;
};

/// One learner interacting with a teacher that holds `truth`.
class Session {
 public:
  Session(const InterpretationSpace& space, InterpretationId truth);

  const HistoryStep& observe(const Query& query);

  const MetaState& meta() const noexcept { return meta_; }
  const Interpretation& truth() const noexcept { return truth_; }
  bool converged() const noexcept { return is_perfect_information(meta_); }
  History history() const;

 private:
  const InterpretationSpace* space_;
  Interpretation truth_;
  MetaState meta_;
  std::size_t initial_candidates_;
  std::vector<HistoryStep> steps_;
};

/// Learn from total ignorance until perfect information, `max_steps`, or no
/// query can still split the candidates.
History run_session(const InterpretationSpace& space, InterpretationId truth,
                    const QueryStrategy& strategy, std::size_t max_steps);

/// Drive a session through a fixed query order.
History replay_queries(const InterpretationSpace& space, InterpretationId truth,
                       std::span<const Query> queries);

inline constexpr std::size_t kDefaultEnumerationCap = 256;

/// One distinct epistemic trajectory: the sequence of candidate sets from the
/// full space onward, with stutters removed.
struct LearningPath {
  std::vector<std::vector<InterpretationId>> meta_states;
  bool complete = false;
  /// Lexicographically first query order realizing this path.
  std::vector<Query> queries;
  /// Number of informative query orders realizing this path.
  std::uint64_t multiplicity = 0;

  std::size_t length() const noexcept { return meta_states.size() - 1; }
};

struct PathSet {
  std::vector<LearningPath> paths;  // ordered by meta_states

  std::size_t complete_count() const;
};

/// All distinct learning paths of at most `max_length` steps for `truth`.
PathSet enumerate_histories(const InterpretationSpace& space, InterpretationId truth,
                            std::size_t max_length,
                            std::size_t cap = kDefaultEnumerationCap);

enum class InteractionGenerator { RoundRobin, SeededRandom };

std::string_view to_string(InteractionGenerator kind);
std::optional<InteractionGenerator> parse_interaction_generator(std::string_view name);

struct PopulationResult {
  std::size_t learner_count = 0;
  std::vector<History> histories;
  /// Round at which each learner reached perfect information, if it did.
  std::vector<std::optional<std::size_t>> convergence_rounds;
  std::size_t rounds_run = 0;
  bool all_converged = false;
};

/// Every learner receives one observation per round from the shared truth
/// until all have converged or `max_rounds` is reached. Converged learners
/// sit out later rounds.
PopulationResult run_population(const InterpretationSpace& space, InterpretationId truth,
                                std::size_t learner_count, InteractionGenerator generator,
                                std::size_t max_rounds, std::uint64_t seed);

}  // namespace opsem
