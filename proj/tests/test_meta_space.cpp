#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "opsem/meta_space.hpp"
#include "oracle.hpp"

namespace {

using namespace opsem;
using fixtures::code_of;
using fixtures::obs;
using fixtures::q;

std::vector<oracle::Table> tables_of(const Interpretation& interp) {
  std::vector<oracle::Table> out;
  for (const auto& t : interp.tables()) out.push_back(t.indices());
  return out;
}

TEST(EnumerateSpace, SmallSpacesListTablesInOrder) {
  const auto s = fixtures::space4();
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(tables_of(s.member(0)), (oracle::Interp{{0, 0}}));
  EXPECT_EQ(tables_of(s.member(1)), (oracle::Interp{{0, 1}}));
  EXPECT_EQ(tables_of(s.member(2)), (oracle::Interp{{1, 0}}));
  EXPECT_EQ(tables_of(s.member(3)), (oracle::Interp{{1, 1}}));

  EXPECT_EQ(fixtures::space16().size(), 16u);
  EXPECT_EQ(fixtures::space(3, 1, OperatorFamily::permutations()).size(), 6u);
}

TEST(EnumerateSpace, MatchesBruteForceMemberForMember) {
  for (std::string family : {"all-functions", "permutations", "constants"}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t signals = 1; signals <= 2; ++signals) {
        const auto expected = oracle::interpretations(family, n, signals);
        const auto s = enumerate_space(RepCapacity(n), Language::of_size(signals),
                                       OperatorFamily{*parse_family_kind(family), {}});
        ASSERT_EQ(s.size(), expected.size()) << family << " n=" << n << " L=" << signals;
        for (InterpretationId id = 0; id < s.size(); ++id) {
          ASSERT_EQ(tables_of(s.member(id)), expected[id]);
          ASSERT_EQ(s.find(s.member(id).tables()), id);
        }
      }
    }
  }
}

TEST(EnumerateSpace, ExplicitListIsSortedAndDeduplicated) {
  auto t = [](std::vector<std::uint32_t> v) { return OperatorTable::from_indices(v); };
  const auto s = fixtures::space(2, 2, OperatorFamily::explicit_list({t({1, 0}), t({0, 1})}));
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(tables_of(s.member(0)), (oracle::Interp{{0, 1}, {0, 1}}));
  EXPECT_EQ(tables_of(s.member(3)), (oracle::Interp{{1, 0}, {1, 0}}));

  EXPECT_EQ(code_of([&] {
              fixtures::space(2, 1, OperatorFamily::explicit_list({t({1, 0}), t({1, 0})}));
            }),
            ErrorCode::InvalidFamily);
  EXPECT_EQ(code_of([&] { fixtures::space(2, 1, OperatorFamily::explicit_list({})); }),
            ErrorCode::InvalidFamily);
  EXPECT_EQ(code_of([&] {
              fixtures::space(3, 1, OperatorFamily::explicit_list({t({1, 0})}));
            }),
            ErrorCode::CapacityMismatch);
}

TEST(EnumerateSpace, GuardsSizeAndLanguage) {
  // 3^3 = 27 per signal, 27^5 > 10^6.
  EXPECT_EQ(code_of([] { fixtures::space(3, 5); }), ErrorCode::SpaceTooLarge);
  // Saturating count: 20^20 overflows 64 bits.
  EXPECT_EQ(code_of([] { fixtures::space(20, 1); }), ErrorCode::SpaceTooLarge);
  EXPECT_EQ(code_of([] {
              enumerate_space(RepCapacity(2), Language::of_size(2),
                              OperatorFamily::all_functions(), 15);
            }),
            ErrorCode::SpaceTooLarge);
  EXPECT_NO_THROW(enumerate_space(RepCapacity(2), Language::of_size(2),
                                  OperatorFamily::all_functions(), 16));
  EXPECT_EQ(code_of([] { Language({}); }), ErrorCode::EmptyLanguage);
}

TEST(InitialMetaState, IsTheWholeSpace) {
  const auto m4 = initial_meta_state(fixtures::space4());
  EXPECT_EQ(m4.candidates(), (std::vector<InterpretationId>{0, 1, 2, 3}));
  EXPECT_EQ(initial_meta_state(fixtures::space16()).size(), 16u);
  const auto single = initial_meta_state(fixtures::space(1, 2));
  EXPECT_TRUE(is_perfect_information(single));
}

TEST(MetaState, NormalizesAndValidates) {
  const auto s = fixtures::space4();
  EXPECT_EQ(MetaState(s, {3, 1, 3}).candidates(), (std::vector<InterpretationId>{1, 3}));
  EXPECT_EQ(code_of([&] { MetaState(s, {}); }), ErrorCode::InvalidMetaState);
  EXPECT_EQ(code_of([&] { MetaState(s, {4}); }), ErrorCode::InvalidMetaState);
}

TEST(Refine, FiltersByObservation) {
  const auto s = fixtures::space16();
  const auto full = initial_meta_state(s);
  const auto after = refine(s, full, obs(0, 0, 1));
  EXPECT_EQ(after.size(), 8u);

  const auto truth = s.member(fixtures::kTruth16);
  const MetaState single(s, {fixtures::kTruth16});
  for (const auto& query : s.all_queries()) {
    const Observation o{query.state, query.signal,
                        apply_signal(truth, query.signal, query.state)};
    EXPECT_EQ(refine(s, single, o), single);
  }

  EXPECT_EQ(code_of([&] { refine(s, after, obs(0, 0, 0)); }),
            ErrorCode::ContradictoryEvidence);
}

TEST(Refine, RejectsInvalidInputs) {
  const auto s = fixtures::space16();
  const auto full = initial_meta_state(s);
  EXPECT_EQ(code_of([&] { refine(s, full, obs(2, 0, 0)); }), ErrorCode::UnknownState);
  EXPECT_EQ(code_of([&] { refine(s, full, obs(0, 0, 2)); }), ErrorCode::UnknownState);
  EXPECT_EQ(code_of([&] { refine(s, full, obs(0, 2, 0)); }), ErrorCode::UnknownSignal);
  const auto other = fixtures::space4();
  EXPECT_EQ(code_of([&] { refine(other, full, obs(0, 0, 0)); }),
            ErrorCode::InvalidMetaState);
}

TEST(PartialOperator, IsTheUnionOfCandidateImages) {
  const auto s = fixtures::space16();
  const auto full = initial_meta_state(s);
  EXPECT_EQ(partial_operator(s, full, Signal{0}, StateId{0}),
            (StateSet{StateId{0}, StateId{1}}));

  const MetaState single(s, {fixtures::kTruth16});
  EXPECT_EQ(partial_operator(s, single, Signal{0}, StateId{0}), (StateSet{StateId{1}}));

  const auto after = refine(s, full, obs(0, 0, 1));
  EXPECT_EQ(partial_operator(s, after, Signal{0}, StateId{0}), (StateSet{StateId{1}}));
  EXPECT_EQ(partial_operator(s, after, Signal{1}, StateId{0}).size(), 2u);

  EXPECT_EQ(code_of([&] { partial_operator(s, full, Signal{3}, StateId{0}); }),
            ErrorCode::UnknownSignal);
  EXPECT_EQ(code_of([&] { partial_operator(s, full, Signal{0}, StateId{3}); }),
            ErrorCode::UnknownState);
}

TEST(Entropy, IsLog2OfCandidateCount) {
  const auto s = fixtures::space16();
  EXPECT_DOUBLE_EQ(entropy(initial_meta_state(s)), 4.0);
  EXPECT_DOUBLE_EQ(entropy(MetaState(s, {5})), 0.0);
  EXPECT_DOUBLE_EQ(entropy(refine(s, initial_meta_state(s), obs(0, 0, 1))), 3.0);
}

TEST(PerfectInformation, ReachedAfterTheFourQuerySweep) {
  const auto s = fixtures::space16();
  auto m = initial_meta_state(s);
  EXPECT_FALSE(is_perfect_information(m));
  EXPECT_TRUE(is_perfect_information(MetaState(s, {3})));
  const auto truth = s.member(fixtures::kTruth16);
  for (const auto& query : s.all_queries()) {
    m = refine(s, m, Observation{query.state, query.signal,
                                 apply_signal(truth, query.signal, query.state)});
  }
  EXPECT_TRUE(is_perfect_information(m));
  EXPECT_EQ(m.candidates(), (std::vector<InterpretationId>{fixtures::kTruth16}));
}

TEST(IndistinguishableClasses, PartitionsByResponses) {
  const auto s = fixtures::space16();
  const auto all = indistinguishable_classes(s, s.all_queries());
  ASSERT_EQ(all.size(), 16u);
  for (InterpretationId id = 0; id < 16; ++id) {
    EXPECT_EQ(all[id], (std::vector<InterpretationId>{id}));
  }

  const auto none = indistinguishable_classes(s, {});
  ASSERT_EQ(none.size(), 1u);
  EXPECT_EQ(none[0].size(), 16u);

  const std::vector<Query> one{q(0, 0), q(0, 0)};
  const auto split = indistinguishable_classes(s, one);
  ASSERT_EQ(split.size(), 2u);
  EXPECT_EQ(split[0].size(), 8u);
  EXPECT_EQ(split[1].size(), 8u);
  EXPECT_EQ(split[0].front(), 0u);
  EXPECT_EQ(split[1].front(), 8u);
}

TEST(OutcomeCounts, SplitsTheFullSpaceEvenly) {
  const auto s = fixtures::space16();
  const auto full = initial_meta_state(s);
  for (const auto& query : s.all_queries()) {
    EXPECT_EQ(outcome_counts(s, full, query), (std::vector<std::size_t>{8, 8}));
    EXPECT_TRUE(is_informative(s, full, query));
  }
  EXPECT_FALSE(is_informative(s, MetaState(s, {0}), q(0, 0)));
}

TEST(MetaSpaceProperties, PartialOperatorSingletonIffPerfectInformation) {
  // Exhaustive over every nonempty subset of the 4- and 16-member spaces.
  for (std::size_t signals = 1; signals <= 2; ++signals) {
    const auto s = fixtures::space(2, signals);
    const std::uint32_t subsets = 1u << s.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      std::vector<InterpretationId> ids;
      for (InterpretationId i = 0; i < s.size(); ++i) {
        if (mask & (1u << i)) ids.push_back(i);
      }
      const MetaState m(s, ids);
      bool all_singleton = true;
      for (const auto& query : s.all_queries()) {
        all_singleton =
            all_singleton && partial_operator(s, m, query.signal, query.state).size() == 1;
      }
      ASSERT_EQ(all_singleton, is_perfect_information(m)) << "mask " << mask;
    }
  }
}

TEST(MetaSpaceProperties, RefinementLawsOnRandomCases) {
  std::mt19937_64 gen(20261016);
  const std::vector<InterpretationSpace> spaces = {
      fixtures::space(2, 1), fixtures::space(2, 2), fixtures::space(3, 1),
      fixtures::space(3, 2, OperatorFamily::permutations()),
      fixtures::space(3, 2, OperatorFamily::constants())};
  for (int trial = 0; trial < 2000; ++trial) {
    const auto& s = spaces[gen() % spaces.size()];
    const auto members = oracle::interpretations(std::string(to_string(s.family().kind)),
                                                 s.capacity().size(), s.language().size());
    const auto truth_id = static_cast<InterpretationId>(gen() % s.size());
    const auto truth = s.member(truth_id);

    std::vector<InterpretationId> ids{truth_id};
    for (InterpretationId i = 0; i < s.size(); ++i) {
      if (gen() % 2) ids.push_back(i);
    }
    const MetaState m(s, ids);
    const auto queries = s.all_queries();
    const auto& query = queries[gen() % queries.size()];
    const Observation o{query.state, query.signal,
                        apply_signal(truth, query.signal, query.state)};
    const auto r = refine(s, m, o);

    ASSERT_TRUE(std::includes(m.candidates().begin(), m.candidates().end(),
                              r.candidates().begin(), r.candidates().end()));
    ASSERT_TRUE(r.contains(truth_id));
    ASSERT_EQ(refine(s, r, o), r);
    ASSERT_LE(entropy(r), entropy(m));
    ASSERT_EQ(r.candidates(), oracle::filter(members, m.candidates(), o.pre.index,
                                             o.signal.index, o.post.index));
  }
}

}  // namespace
