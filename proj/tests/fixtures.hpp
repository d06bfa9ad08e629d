#pragma once

#include <string>

#include <gtest/gtest.h>

#include "opsem/meta_space.hpp"

namespace fixtures {

inline opsem::InterpretationSpace space(std::size_t states, std::size_t signals,
                                        opsem::OperatorFamily family =
                                            opsem::OperatorFamily::all_functions()) {
  return opsem::enumerate_space(opsem::RepCapacity(states),
                                opsem::Language::of_size(signals), std::move(family));
}

/// |R|=2, |L|=2, all functions: 16 members.
inline opsem::InterpretationSpace space16() { return space(2, 2); }

/// |R|=2, |L|=1, all functions: 4 members.
inline opsem::InterpretationSpace space4() { return space(2, 1); }

/// {a: swap, b: const r0} in space16.
inline constexpr opsem::InterpretationId kTruth16 = 8;
/// {a: swap} in space4.
inline constexpr opsem::InterpretationId kSwap4 = 2;

inline opsem::ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const opsem::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected opsem::Error";
  return opsem::ErrorCode::IoError;
}

inline opsem::Query q(std::uint32_t state, std::uint32_t signal) {
  return opsem::Query{opsem::StateId{state}, opsem::Signal{signal}};
}

inline opsem::Observation obs(std::uint32_t pre, std::uint32_t signal, std::uint32_t post) {
  return opsem::Observation{opsem::StateId{pre}, opsem::Signal{signal},
                            opsem::StateId{post}};
}

}  // namespace fixtures
