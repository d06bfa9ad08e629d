#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opsem/error.hpp"

namespace opsem {

/// One representational state, a dense index into a RepCapacity.
struct StateId {
  std::uint32_t index = 0;
  friend auto operator<=>(const StateId&, const StateId&) = default;
};

/// One signal of the language, a dense index into a Language.
struct Signal {
  std::uint32_t index = 0;
  friend auto operator<=>(const Signal&, const Signal&) = default;
};

using InterpretationId = std::uint32_t;

/// The finite set of states an agent can occupy. States are 0..size-1; labels
/// are optional display names and default to "r<i>".
class RepCapacity {
 public:
  explicit RepCapacity(std::size_t size, std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return size_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool contains(StateId s) const noexcept { return s.index < size_; }
  std::string label(StateId s) const;
  std::optional<StateId> find(std::string_view label) const;

  friend bool operator==(const RepCapacity&, const RepCapacity&) = default;

 private:
  std::size_t size_;
  std::vector<std::string> labels_;
};

/// The signal alphabet. Labels are required and unique.
class Language {
 public:
  explicit Language(std::vector<std::string> labels);
  /// Unlabelled language of `size` signals named a, b, c, ...
  static Language of_size(std::size_t size);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool contains(Signal a) const noexcept { return a.index < labels_.size(); }
  const std::string& label(Signal a) const;
  std::optional<Signal> find(std::string_view label) const;

  friend bool operator==(const Language&, const Language&) = default;

 private:
  std::vector<std::string> labels_;
};

/// A total operator on a capacity, stored as its image table:
/// image()[s] is the state reached from s.
class OperatorTable {
 public:
  OperatorTable() = default;
  explicit OperatorTable(std::vector<StateId> image);
  static OperatorTable from_indices(std::span<const std::uint32_t> image);

  std::size_t size() const noexcept { return image_.size(); }
  const std::vector<StateId>& image() const noexcept { return image_; }
  StateId operator()(StateId s) const;
  std::vector<std::uint32_t> indices() const;

  friend auto operator<=>(const OperatorTable&, const OperatorTable&) = default;

 private:
  std::vector<StateId> image_;
};

/// Maps every signal to an operator on the capacity. `id` is the position in
/// the enclosing InterpretationSpace (0 for free-standing interpretations).
class Interpretation {
 public:
  Interpretation(InterpretationId id, std::vector<OperatorTable> tables);

  InterpretationId id() const noexcept { return id_; }
  const std::vector<OperatorTable>& tables() const noexcept { return tables_; }
  std::size_t language_size() const noexcept { return tables_.size(); }
  std::size_t capacity_size() const noexcept { return tables_.front().size(); }
  const OperatorTable& table(Signal a) const;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  InterpretationId id_;
  std::vector<OperatorTable> tables_;
};

OperatorTable identity_operator(const RepCapacity& capacity);

/// Apply `first`, then `second`.
OperatorTable compose(const OperatorTable& first, const OperatorTable& second);

StateId apply_signal(const Interpretation& interp, Signal signal, StateId state);

/// Left-to-right action of a signal sequence; the empty sequence is the identity.
StateId apply_sequence(const Interpretation& interp, std::span<const Signal> seq,
                       StateId state);

}  // namespace opsem
