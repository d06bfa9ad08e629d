#include <gtest/gtest.h>

#include "opsem/core.hpp"
#include "oracle.hpp"

namespace {

using opsem::ErrorCode;
using opsem::Interpretation;
using opsem::OperatorTable;
using opsem::RepCapacity;
using opsem::Signal;
using opsem::StateId;

OperatorTable table(std::vector<std::uint32_t> image) {
  return OperatorTable::from_indices(image);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const opsem::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected opsem::Error";
  return ErrorCode::IoError;
}

const Interpretation kTruth(0, {table({1, 0}), table({0, 0})});  // a: swap, b: const r0
constexpr Signal kA{0};
constexpr Signal kB{1};
constexpr StateId kR0{0};
constexpr StateId kR1{1};

TEST(IdentityOperator, MapsEveryStateToItself) {
  EXPECT_EQ(opsem::identity_operator(RepCapacity(1)), table({0}));
  EXPECT_EQ(opsem::identity_operator(RepCapacity(2)), table({0, 1}));
  EXPECT_EQ(opsem::identity_operator(RepCapacity(3)), table({0, 1, 2}));
}

TEST(Compose, AppliesFirstThenSecond) {
  const auto swap = table({1, 0});
  const auto const_r0 = table({0, 0});
  EXPECT_EQ(opsem::compose(opsem::identity_operator(RepCapacity(2)), swap), swap);
  EXPECT_EQ(opsem::compose(swap, swap), table({0, 1}));
  EXPECT_EQ(opsem::compose(swap, const_r0), table({0, 0}));
  // Order matters: const then swap lands on r1.
  EXPECT_EQ(opsem::compose(const_r0, swap), table({1, 1}));
}

TEST(Compose, RejectsMismatchedCapacities) {
  EXPECT_EQ(code_of([] { opsem::compose(table({0, 1}), table({0, 1, 2})); }),
            ErrorCode::CapacityMismatch);
}

TEST(Compose, IdentityIsTwoSidedUnitForEveryTable) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto id = opsem::identity_operator(RepCapacity(n));
    for (const auto& t : oracle::family_tables("all-functions", n)) {
      const auto op = table(t);
      ASSERT_EQ(opsem::compose(id, op), op);
      ASSERT_EQ(opsem::compose(op, id), op);
    }
  }
}

TEST(ApplySignal, ReadsTheTable) {
  EXPECT_EQ(opsem::apply_signal(kTruth, kA, kR0), kR1);
  EXPECT_EQ(opsem::apply_signal(kTruth, kB, kR1), kR0);
  const Interpretation identity(0, {table({0, 1, 2})});
  for (std::uint32_t s = 0; s < 3; ++s) {
    EXPECT_EQ(opsem::apply_signal(identity, kA, StateId{s}), StateId{s});
  }
}

TEST(ApplySignal, RejectsUnknownSignalAndState) {
  EXPECT_EQ(code_of([] { opsem::apply_signal(kTruth, Signal{2}, kR0); }),
            ErrorCode::UnknownSignal);
  EXPECT_EQ(code_of([] { opsem::apply_signal(kTruth, kA, StateId{2}); }),
            ErrorCode::UnknownState);
}

TEST(ApplySequence, FoldsLeftToRight) {
  EXPECT_EQ(opsem::apply_sequence(kTruth, {}, kR1), kR1);
  const std::vector<Signal> ab{kA, kB};
  EXPECT_EQ(opsem::apply_sequence(kTruth, ab, kR0), kR0);
  const std::vector<Signal> aa{kA, kA};
  EXPECT_EQ(opsem::apply_sequence(kTruth, aa, kR0), kR0);
  const std::vector<Signal> ba{kB, kA};
  EXPECT_EQ(opsem::apply_sequence(kTruth, ba, kR0), kR1);
}

TEST(ApplySequence, ValidatesEvenWhenEmpty) {
  EXPECT_EQ(code_of([] { opsem::apply_sequence(kTruth, {}, StateId{5}); }),
            ErrorCode::UnknownState);
  const std::vector<Signal> bad{kA, Signal{9}};
  EXPECT_EQ(code_of([&] { opsem::apply_sequence(kTruth, bad, kR0); }),
            ErrorCode::UnknownSignal);
}

TEST(OperatorTable, RejectsOutOfRangeImage) {
  EXPECT_EQ(code_of([] { table({2, 0}); }), ErrorCode::InvalidOperator);
}

TEST(Interpretation, RejectsEmptyLanguageAndMixedCapacities) {
  EXPECT_EQ(code_of([] { Interpretation(0, {}); }), ErrorCode::EmptyLanguage);
  EXPECT_EQ(code_of([] { Interpretation(0, {table({0}), table({0, 1})}); }),
            ErrorCode::CapacityMismatch);
}

TEST(RepCapacity, LabelsAreOptionalAndUnique) {
  RepCapacity plain(3);
  EXPECT_EQ(plain.label(StateId{2}), "r2");
  EXPECT_EQ(plain.find("r1"), StateId{1});

  RepCapacity named(2, {"calm", "alert"});
  EXPECT_EQ(named.find("alert"), StateId{1});
  EXPECT_FALSE(named.find("r0"));

  EXPECT_EQ(code_of([] { RepCapacity(0); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { RepCapacity(2, {"x", "x"}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { RepCapacity(2, {"x"}); }), ErrorCode::InvalidArgument);
}

TEST(Language, RequiresSignals) {
  EXPECT_EQ(code_of([] { opsem::Language({}); }), ErrorCode::EmptyLanguage);
  EXPECT_EQ(opsem::Language::of_size(2).labels(), (std::vector<std::string>{"a", "b"}));
}

}  // namespace
