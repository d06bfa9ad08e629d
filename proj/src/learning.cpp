#include "opsem/learning.hpp"

#include <algorithm>
#include <map>

namespace opsem {

std::uint64_t SplitMix64::mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() noexcept {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix(state_);
}

std::uint64_t SplitMix64::uniform(std::uint64_t bound) noexcept {
  // Reject the low residue class so every value in [0, bound) is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const auto r = next();
    if (r >= threshold) return r % bound;
  }
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return SplitMix64::mix(seed ^ SplitMix64::mix(index + 0x9e3779b97f4a7c15ULL));
}

std::string_view to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Sweep: return "sweep";
    case StrategyKind::GreedySplit: return "greedy-split";
    case StrategyKind::Random: return "random";
  }
  return "unknown";
}

std::optional<StrategyKind> parse_strategy_kind(std::string_view name) {
  for (auto k : {StrategyKind::Sweep, StrategyKind::GreedySplit, StrategyKind::Random}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view to_string(InteractionGenerator kind) {
  switch (kind) {
    case InteractionGenerator::RoundRobin: return "round-robin";
    case InteractionGenerator::SeededRandom: return "seeded-random";
  }
  return "unknown";
}

std::optional<InteractionGenerator> parse_interaction_generator(std::string_view name) {
  for (auto k : {InteractionGenerator::RoundRobin, InteractionGenerator::SeededRandom}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

Observation generate_observation(const Interpretation& truth, const Query& query) {
  return Observation{query.state, query.signal,
                     apply_signal(truth, query.signal, query.state)};
}

Query select_query(const QueryStrategy& strategy, const InterpretationSpace& space,
                   const MetaState& meta, const std::set<Query>& asked,
                   SplitMix64& rng) {
  std::vector<Query> informative;
  std::vector<std::size_t> worst_case;
  for (const auto& q : space.all_queries()) {
    if (asked.contains(q)) continue;
    const auto counts = outcome_counts(space, meta, q);
    const auto outcomes =
        std::count_if(counts.begin(), counts.end(), [](std::size_t c) { return c > 0; });
    if (outcomes < 2) continue;
    informative.push_back(q);
    worst_case.push_back(*std::max_element(counts.begin(), counts.end()));
  }
  if (informative.empty()) {
    throw Error(ErrorCode::NoInformativeQuery,
                "no query distinguishes the " + std::to_string(meta.size()) +
                    " remaining candidates");
  }

  switch (strategy.kind) {
    case StrategyKind::Sweep:
      return informative.front();
    case StrategyKind::GreedySplit: {
      // min_element keeps the first minimum, which is the lexicographic tie-break.
      auto best = std::min_element(worst_case.begin(), worst_case.end());
      return informative[static_cast<std::size_t>(best - worst_case.begin())];
    }
    case StrategyKind::Random:
      return informative[rng.uniform(informative.size())];
  }
  return informative.front();
}

std::vector<std::size_t> History::candidate_trace() const {
  std::vector<std::size_t> trace{initial_candidates};
  for (const auto& s : steps) trace.push_back(s.candidates_after);
  return trace;
}

Session::Session(const InterpretationSpace& space, InterpretationId truth)
    : space_(&space),
      truth_(space.member(truth)),
      meta_(initial_meta_state(space)),
      initial_candidates_(space.size()) {}

const HistoryStep& Session::observe(const Query& query) {
  const auto obs = generate_observation(truth_, query);
  meta_ = refine(*space_, meta_, obs);
  steps_.push_back(HistoryStep{steps_.size() + 1, query, obs, meta_.size(), entropy(meta_)});
  return steps_.back();
}

History Session::history() const {
  return History{initial_candidates_, steps_, converged(), meta_.candidates()};
}

History run_session(const InterpretationSpace& space, InterpretationId truth,
                    const QueryStrategy& strategy, std::size_t max_steps) {
  Session session(space, truth);
  SplitMix64 rng(strategy.seed);
  std::set<Query> asked;
  for (std::size_t step = 0; step < max_steps && !session.converged(); ++step) {
    Query q;
    try {
      q = select_query(strategy, space, session.meta(), asked, rng);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NoInformativeQuery) break;
      throw;
    }
    asked.insert(q);
    session.observe(q);
  }
  return session.history();
}

History replay_queries(const InterpretationSpace& space, InterpretationId truth,
                       std::span<const Query> queries) {
  Session session(space, truth);
  for (const auto& q : queries) session.observe(q);
  return session.history();
}

std::size_t PathSet::complete_count() const {
  return static_cast<std::size_t>(
      std::count_if(paths.begin(), paths.end(), [](const auto& p) { return p.complete; }));
}

namespace {

struct PathEnumerator {
  PathEnumerator(const InterpretationSpace& s, InterpretationId truth_id, std::size_t limit)
      : space(s), truth(s.member(truth_id)), max_length(limit), queries(s.all_queries()) {}

  const InterpretationSpace& space;
  Interpretation truth;
  std::size_t max_length;
  std::vector<Query> queries;
  std::vector<std::vector<InterpretationId>> trail;
  std::vector<Query> order;
  std::map<std::vector<std::vector<InterpretationId>>, LearningPath> found;

  void visit(const MetaState& meta) {
    trail.push_back(meta.candidates());
    auto [it, inserted] = found.try_emplace(trail);
    if (inserted) {
      it->second.meta_states = trail;
      it->second.complete = is_perfect_information(meta);
      it->second.queries = order;
    }
    ++it->second.multiplicity;

    // Only informative queries are expanded: anything else is a stutter, and an
    // asked query is never informative again.
    if (order.size() < max_length) {
      for (const auto& q : queries) {
        if (!is_informative(space, meta, q)) continue;
        order.push_back(q);
        visit(refine(space, meta, generate_observation(truth, q)));
        order.pop_back();
      }
    }
    trail.pop_back();
  }
};

}  // namespace

PathSet enumerate_histories(const InterpretationSpace& space, InterpretationId truth,
                            std::size_t max_length, std::size_t cap) {
  if (space.size() > cap) {
    throw Error(ErrorCode::SpaceTooLarge,
                "history enumeration is capped at " + std::to_string(cap) +
                    " members; space has " + std::to_string(space.size()));
  }
  const auto query_count = space.capacity().size() * space.language().size();
  if (max_length > query_count) {
    throw Error(ErrorCode::InvalidArgument,
                "max-length " + std::to_string(max_length) + " exceeds the " +
                    std::to_string(query_count) + " available queries");
  }
  PathEnumerator e(space, truth, max_length);
  e.visit(initial_meta_state(space));

  PathSet out;
  out.paths.reserve(e.found.size());
  for (auto& [key, path] : e.found) out.paths.push_back(std::move(path));
  return out;
}

PopulationResult run_population(const InterpretationSpace& space, InterpretationId truth,
                                std::size_t learner_count, InteractionGenerator generator,
                                std::size_t max_rounds, std::uint64_t seed) {
  if (learner_count == 0) {
    throw Error(ErrorCode::InvalidArgument, "population needs at least one learner");
  }
  const auto queries = space.all_queries();
  std::vector<Session> learners;
  std::vector<SplitMix64> streams;
  learners.reserve(learner_count);
  for (std::size_t i = 0; i < learner_count; ++i) {
    learners.emplace_back(space, truth);
    streams.emplace_back(derive_stream_seed(seed, i));
  }

  PopulationResult result;
  result.learner_count = learner_count;
  result.convergence_rounds.assign(learner_count, std::nullopt);
  for (std::size_t i = 0; i < learner_count; ++i) {
    if (learners[i].converged()) result.convergence_rounds[i] = 0;
  }
  auto all_done = [&] {
    return std::all_of(learners.begin(), learners.end(),
                       [](const Session& s) { return s.converged(); });
  };

  while (result.rounds_run < max_rounds && !all_done()) {
    const auto round = ++result.rounds_run;
    for (std::size_t i = 0; i < learner_count; ++i) {
      if (learners[i].converged()) continue;
      const auto& q = generator == InteractionGenerator::RoundRobin
                          ? queries[(round - 1) % queries.size()]
                          : queries[streams[i].uniform(queries.size())];
      learners[i].observe(q);
      if (learners[i].converged()) result.convergence_rounds[i] = round;
    }
  }

  result.all_converged = all_done();
  result.histories.reserve(learner_count);
  for (const auto& s : learners) result.histories.push_back(s.history());
  return result;
}

}  // namespace opsem
