#include "opsem/meta_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace opsem {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    out = saturating_mul(out, base);
    if (out == kSaturated) break;
  }
  return out;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

OperatorTable table_of(const std::vector<std::uint32_t>& image) {
  return OperatorTable::from_indices(image);
}

std::vector<OperatorTable> family_operators(const OperatorFamily& family,
                                            std::size_t n) {
  std::vector<OperatorTable> out;
  switch (family.kind) {
    case FamilyKind::AllFunctions: {
      std::vector<std::uint32_t> digits(n, 0);
      while (true) {
        out.push_back(table_of(digits));
        std::size_t pos = n;
        while (pos > 0 && digits[pos - 1] + 1 == n) digits[--pos] = 0;
        if (pos == 0) break;
        ++digits[pos - 1];
      }
      break;
    }
    case FamilyKind::Permutations: {
      std::vector<std::uint32_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0u);
      do {
        out.push_back(table_of(perm));
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
    case FamilyKind::Constants:
      for (std::uint32_t c = 0; c < n; ++c) {
        out.push_back(table_of(std::vector<std::uint32_t>(n, c)));
      }
      break;
    case FamilyKind::ExplicitList:
      out = family.tables;
      std::sort(out.begin(), out.end());
      break;
  }
  return out;
}

void validate_family(const OperatorFamily& family, std::size_t n) {
  if (family.kind != FamilyKind::ExplicitList) {
    if (!family.tables.empty()) {
      throw Error(ErrorCode::InvalidFamily,
                  "only explicit-list families carry operator tables");
    }
    return;
  }
  if (family.tables.empty()) {
    throw Error(ErrorCode::InvalidFamily, "explicit-list family has no operators");
  }
  std::set<OperatorTable> seen;
  for (const auto& t : family.tables) {
    if (t.size() != n) {
      throw Error(ErrorCode::CapacityMismatch,
                  "explicit operator of size " + std::to_string(t.size()) +
                      " over capacity of size " + std::to_string(n));
    }
    if (!seen.insert(t).second) {
      throw Error(ErrorCode::InvalidFamily, "explicit-list family repeats an operator");
    }
  }
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::AllFunctions: return "all-functions";
    case FamilyKind::Permutations: return "permutations";
    case FamilyKind::Constants: return "constants";
    case FamilyKind::ExplicitList: return "explicit-list";
  }
  return "unknown";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  for (auto k : {FamilyKind::AllFunctions, FamilyKind::Permutations,
                 FamilyKind::Constants, FamilyKind::ExplicitList}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

bool family_contains(const OperatorFamily& family, const OperatorTable& table,
                     std::size_t capacity_size) {
  if (table.size() != capacity_size) return false;
  const auto& img = table.image();
  switch (family.kind) {
    case FamilyKind::AllFunctions:
      return true;
    case FamilyKind::Permutations: {
      std::vector<bool> hit(capacity_size, false);
      for (auto s : img) {
        if (hit[s.index]) return false;
        hit[s.index] = true;
      }
      return true;
    }
    case FamilyKind::Constants:
      return std::all_of(img.begin(), img.end(),
                         [&](StateId s) { return s == img.front(); });
    case FamilyKind::ExplicitList:
      return std::find(family.tables.begin(), family.tables.end(), table) !=
             family.tables.end();
  }
  return false;
}

std::uint64_t family_operator_count(const OperatorFamily& family,
                                    std::size_t capacity_size) {
  switch (family.kind) {
    case FamilyKind::AllFunctions:
      return saturating_pow(capacity_size, capacity_size);
    case FamilyKind::Permutations: {
      std::uint64_t f = 1;
      for (std::size_t i = 2; i <= capacity_size && f != kSaturated; ++i) {
        f = saturating_mul(f, i);
      }
      return f;
    }
    case FamilyKind::Constants:
      return capacity_size;
    case FamilyKind::ExplicitList:
      return family.tables.size();
  }
  return 0;
}

std::uint64_t projected_space_size(const OperatorFamily& family,
                                   std::size_t capacity_size,
                                   std::size_t language_size) {
  return saturating_pow(family_operator_count(family, capacity_size), language_size);
}

InterpretationSpace::InterpretationSpace(RepCapacity capacity, Language language,
                                         OperatorFamily family)
    : capacity_(std::move(capacity)),
      language_(std::move(language)),
      family_(std::move(family)) {}

InterpretationSpace enumerate_space(RepCapacity capacity, Language language,
                                    OperatorFamily family, std::uint64_t limit) {
  const auto n = capacity.size();
  validate_family(family, n);
  const auto projected = projected_space_size(family, n, language.size());
  const std::uint64_t hard_limit =
      std::min<std::uint64_t>(limit, std::numeric_limits<InterpretationId>::max());
  if (projected > hard_limit) {
    throw Error(ErrorCode::SpaceTooLarge,
                "interpretation space of " +
                    (projected == kSaturated ? std::string("more than 2^64")
                                             : std::to_string(projected)) +
                    " members exceeds the limit of " + std::to_string(limit));
  }

  InterpretationSpace space(std::move(capacity), std::move(language), std::move(family));
  space.operators_ = family_operators(space.family_, n);
  space.size_ = static_cast<std::size_t>(projected);

  const auto signals = space.language_.size();
  space.strides_.assign(signals, 1);
  for (std::size_t j = signals; j-- > 1;) {
    space.strides_[j - 1] = space.strides_[j] * space.operators_.size();
  }

  std::uint64_t h = mix(0, n);
  h = mix(h, signals);
  h = mix(h, static_cast<std::uint64_t>(space.family_.kind));
  for (const auto& op : space.operators_) {
    for (auto s : op.image()) h = mix(h, s.index);
  }
  space.fingerprint_ = h;
  return space;
}

std::vector<Query> InterpretationSpace::all_queries() const {
  std::vector<Query> out;
  out.reserve(capacity_.size() * language_.size());
  for (std::uint32_t s = 0; s < capacity_.size(); ++s) {
    for (std::uint32_t a = 0; a < language_.size(); ++a) {
      out.push_back(Query{StateId{s}, Signal{a}});
    }
  }
  return out;
}

void InterpretationSpace::check_member(InterpretationId id) const {
  if (id >= size_) {
    throw Error(ErrorCode::InvalidArgument,
                "interpretation id " + std::to_string(id) + " outside space of " +
                    std::to_string(size_) + " members");
  }
}

void InterpretationSpace::check_query(Signal signal, StateId state) const {
  if (!language_.contains(signal)) {
    throw Error(ErrorCode::UnknownSignal,
                "signal " + std::to_string(signal.index) + " outside language of size " +
                    std::to_string(language_.size()));
  }
  if (!capacity_.contains(state)) {
    throw Error(ErrorCode::UnknownState, "state " + std::to_string(state.index) +
                                             " outside capacity of size " +
                                             std::to_string(capacity_.size()));
  }
}

Interpretation InterpretationSpace::member(InterpretationId id) const {
  check_member(id);
  std::vector<OperatorTable> tables;
  tables.reserve(language_.size());
  for (std::uint32_t a = 0; a < language_.size(); ++a) {
    tables.push_back(operators_[operator_index(id, Signal{a})]);
  }
  return Interpretation(id, std::move(tables));
}

std::optional<InterpretationId> InterpretationSpace::find(
    std::span<const OperatorTable> tables) const {
  if (tables.size() != language_.size()) return std::nullopt;
  std::uint64_t id = 0;
  for (std::size_t j = 0; j < tables.size(); ++j) {
    auto it = std::lower_bound(operators_.begin(), operators_.end(), tables[j]);
    if (it == operators_.end() || *it != tables[j]) return std::nullopt;
    id += static_cast<std::uint64_t>(it - operators_.begin()) * strides_[j];
  }
  return static_cast<InterpretationId>(id);
}

StateId InterpretationSpace::image(InterpretationId id, Signal signal,
                                   StateId state) const {
  return operators_[operator_index(id, signal)].image()[state.index];
}

MetaState::MetaState(const InterpretationSpace& space,
                     std::vector<InterpretationId> candidates)
    : space_fingerprint_(space.fingerprint()), candidates_(std::move(candidates)) {
  std::sort(candidates_.begin(), candidates_.end());
  candidates_.erase(std::unique(candidates_.begin(), candidates_.end()),
                    candidates_.end());
  if (candidates_.empty()) {
    throw Error(ErrorCode::InvalidMetaState, "meta-state needs at least one candidate");
  }
  if (candidates_.back() >= space.size()) {
    throw Error(ErrorCode::InvalidMetaState,
                "candidate " + std::to_string(candidates_.back()) +
                    " outside space of " + std::to_string(space.size()) + " members");
  }
}

bool MetaState::contains(InterpretationId id) const {
  return std::binary_search(candidates_.begin(), candidates_.end(), id);
}

namespace {

void check_meta(const InterpretationSpace& space, const MetaState& meta) {
  if (meta.space_fingerprint() != space.fingerprint()) {
    throw Error(ErrorCode::InvalidMetaState,
                "meta-state belongs to a different interpretation space");
  }
}

}  // namespace

MetaState initial_meta_state(const InterpretationSpace& space) {
  std::vector<InterpretationId> all(space.size());
  std::iota(all.begin(), all.end(), InterpretationId{0});
  return MetaState(space, std::move(all));
}

MetaState refine(const InterpretationSpace& space, const MetaState& meta,
                 const Observation& obs) {
  check_meta(space, meta);
  space.check_query(obs.signal, obs.pre);
  if (!space.capacity().contains(obs.post)) {
    throw Error(ErrorCode::UnknownState, "observed post-state " +
                                             std::to_string(obs.post.index) +
                                             " outside capacity");
  }
  MetaState out;
  out.space_fingerprint_ = meta.space_fingerprint();
  for (auto id : meta.candidates()) {
    if (space.image(id, obs.signal, obs.pre) == obs.post) out.candidates_.push_back(id);
  }
  if (out.candidates_.empty()) {
    throw Error(ErrorCode::ContradictoryEvidence,
                "observation (" + std::to_string(obs.pre.index) + ", " +
                    std::to_string(obs.signal.index) + ", " +
                    std::to_string(obs.post.index) +
                    ") rules out every remaining candidate");
  }
  return out;
}

StateSet partial_operator(const InterpretationSpace& space, const MetaState& meta,
                          Signal signal, StateId state) {
  check_meta(space, meta);
  space.check_query(signal, state);
  std::vector<bool> hit(space.capacity().size(), false);
  for (auto id : meta.candidates()) hit[space.image(id, signal, state).index] = true;
  StateSet out;
  for (std::uint32_t s = 0; s < hit.size(); ++s) {
    if (hit[s]) out.push_back(StateId{s});
  }
  return out;
}

double entropy(const MetaState& meta) {
  return std::log2(static_cast<double>(meta.size()));
}

bool is_perfect_information(const MetaState& meta) { return meta.size() == 1; }

std::vector<std::size_t> outcome_counts(const InterpretationSpace& space,
                                        const MetaState& meta, const Query& query) {
  check_meta(space, meta);
  space.check_query(query.signal, query.state);
  std::vector<std::size_t> counts(space.capacity().size(), 0);
  for (auto id : meta.candidates()) {
    ++counts[space.image(id, query.signal, query.state).index];
  }
  return counts;
}

bool is_informative(const InterpretationSpace& space, const MetaState& meta,
                    const Query& query) {
  const auto counts = outcome_counts(space, meta, query);
  return std::count_if(counts.begin(), counts.end(),
                       [](std::size_t c) { return c > 0; }) > 1;
}

Partition indistinguishable_classes(const InterpretationSpace& space,
                                    std::span<const Query> queries) {
  std::vector<Query> distinct(queries.begin(), queries.end());
  for (const auto& q : distinct) space.check_query(q.signal, q.state);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  // Members are visited in id order, so classes come out ordered by their
  // smallest member.
  std::map<std::vector<std::uint32_t>, std::size_t> class_of;
  Partition classes;
  std::vector<std::uint32_t> response(distinct.size());
  for (InterpretationId id = 0; id < space.size(); ++id) {
    for (std::size_t q = 0; q < distinct.size(); ++q) {
      response[q] = space.image(id, distinct[q].signal, distinct[q].state).index;
    }
    auto [it, inserted] = class_of.try_emplace(response, classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(id);
  }
  return classes;
}

}  // namespace opsem
