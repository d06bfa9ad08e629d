#include "opsem/core.hpp"

#include <algorithm>
#include <set>

namespace opsem {

namespace {

void require_unique(const std::vector<std::string>& labels, std::string_view what) {
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::InvalidArgument,
                  "duplicate " + std::string(what) + " label '" + l + "'");
    }
  }
}

}  // namespace

RepCapacity::RepCapacity(std::size_t size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
  if (size_ == 0) {
    throw Error(ErrorCode::InvalidArgument, "capacity size must be at least 1");
  }
  if (!labels_.empty() && labels_.size() != size_) {
    throw Error(ErrorCode::InvalidArgument,
                "capacity has " + std::to_string(size_) + " states but " +
                    std::to_string(labels_.size()) + " labels");
  }
  require_unique(labels_, "state");
}

std::string RepCapacity::label(StateId s) const {
  if (!contains(s)) {
    throw Error(ErrorCode::UnknownState, "state " + std::to_string(s.index) +
                                             " outside capacity of size " +
                                             std::to_string(size_));
  }
  return labels_.empty() ? "r" + std::to_string(s.index) : labels_[s.index];
}

std::optional<StateId> RepCapacity::find(std::string_view label) const {
  for (std::size_t i = 0; i < size_; ++i) {
    StateId s{static_cast<std::uint32_t>(i)};
    if (this->label(s) == label) return s;
  }
  return std::nullopt;
}

Language::Language(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw Error(ErrorCode::EmptyLanguage, "language needs at least one signal");
  }
  require_unique(labels_, "signal");
}

Language Language::of_size(std::size_t size) {
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    labels.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                            : "s" + std::to_string(i));
  }
  return Language(std::move(labels));
}

const std::string& Language::label(Signal a) const {
  if (!contains(a)) {
    throw Error(ErrorCode::UnknownSignal,
                "signal " + std::to_string(a.index) + " outside language of size " +
                    std::to_string(labels_.size()));
  }
  return labels_[a.index];
}

std::optional<Signal> Language::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return Signal{static_cast<std::uint32_t>(it - labels_.begin())};
}

OperatorTable::OperatorTable(std::vector<StateId> image) : image_(std::move(image)) {
  for (auto s : image_) {
    if (s.index >= image_.size()) {
      throw Error(ErrorCode::InvalidOperator,
                  "operator image " + std::to_string(s.index) +
                      " outside capacity of size " + std::to_string(image_.size()));
    }
  }
}

OperatorTable OperatorTable::from_indices(std::span<const std::uint32_t> image) {
  std::vector<StateId> states;
  states.reserve(image.size());
  for (auto i : image) states.push_back(StateId{i});
  return OperatorTable(std::move(states));
}

StateId OperatorTable::operator()(StateId s) const {
  if (s.index >= image_.size()) {
    throw Error(ErrorCode::UnknownState, "state " + std::to_string(s.index) +
                                             " outside capacity of size " +
                                             std::to_string(image_.size()));
  }
  return image_[s.index];
}

std::vector<std::uint32_t> OperatorTable::indices() const {
  std::vector<std::uint32_t> out;
  out.reserve(image_.size());
  for (auto s : image_) out.push_back(s.index);
  return out;
}

Interpretation::Interpretation(InterpretationId id, std::vector<OperatorTable> tables)
    : id_(id), tables_(std::move(tables)) {
  if (tables_.empty()) {
    throw Error(ErrorCode::EmptyLanguage, "interpretation needs at least one signal");
  }
  const auto n = tables_.front().size();
  if (n == 0) {
    throw Error(ErrorCode::InvalidOperator, "operator tables must be nonempty");
  }
  for (const auto& t : tables_) {
    if (t.size() != n) {
      throw Error(ErrorCode::CapacityMismatch,
                  "interpretation mixes operators over different capacities");
    }
  }
}

const OperatorTable& Interpretation::table(Signal a) const {
  if (a.index >= tables_.size()) {
    throw Error(ErrorCode::UnknownSignal,
                "signal " + std::to_string(a.index) + " outside language of size " +
                    std::to_string(tables_.size()));
  }
  return tables_[a.index];
}

OperatorTable identity_operator(const RepCapacity& capacity) {
  std::vector<StateId> image(capacity.size());
  for (std::size_t s = 0; s < image.size(); ++s) {
    image[s] = StateId{static_cast<std::uint32_t>(s)};
  }
  return OperatorTable(std::move(image));
}

OperatorTable compose(const OperatorTable& first, const OperatorTable& second) {
  if (first.size() != second.size()) {
    throw Error(ErrorCode::CapacityMismatch,
                "cannot compose operators over capacities " +
                    std::to_string(first.size()) + " and " +
                    std::to_string(second.size()));
  }
  std::vector<StateId> image;
  image.reserve(first.size());
  for (auto s : first.image()) image.push_back(second.image()[s.index]);
  return OperatorTable(std::move(image));
}

StateId apply_signal(const Interpretation& interp, Signal signal, StateId state) {
  return interp.table(signal)(state);
}

StateId apply_sequence(const Interpretation& interp, std::span<const Signal> seq,
                       StateId state) {
  if (state.index >= interp.capacity_size()) {
    throw Error(ErrorCode::UnknownState, "state " + std::to_string(state.index) +
                                             " outside capacity of size " +
                                             std::to_string(interp.capacity_size()));
  }
  for (auto a : seq) state = apply_signal(interp, a, state);
  return state;
}

}  // namespace opsem
