#include "sth/partition.hpp"

#include <optional>
#include <string>

#include "sth/error.hpp"

namespace sth {

StatePartition::StatePartition(std::size_t alphabet_size, std::span<const StateId> interest,
                               std::span<const StateId> other, std::span<const StateId> excluded,
                               double undefined_fallback) {
  if (interest.empty()) throw Error(ErrorCode::InvalidPartition, "empty set of interest");
  if (!(undefined_fallback >= 0.0 && undefined_fallback <= 1.0)) {
    throw Error(ErrorCode::InvalidPartition, "fallback outside [0, 1]");
  }

  std::vector<std::optional<StateRole>> assigned(alphabet_size);
  const auto assign = [&](std::span<const StateId> ids, StateRole role) {
    for (StateId s : ids) {
      if (s >= alphabet_size) {
        throw Error(ErrorCode::InvalidPartition, "state id " + std::to_string(s) +
                                                     " outside alphabet of size " +
                                                     std::to_string(alphabet_size));
      }
      if (assigned[s]) {
        throw Error(ErrorCode::InvalidPartition,
                    "state id " + std::to_string(s) + " listed more than once");
      }
      assigned[s] = role;
    }
  };
  assign(interest, StateRole::Interest);
  assign(other, StateRole::Other);
  assign(excluded, StateRole::Excluded);

  roles_.reserve(alphabet_size);
  for (std::size_t s = 0; s < alphabet_size; ++s) {
    if (!assigned[s]) {
      throw Error(ErrorCode::InvalidPartition, "state id " + std::to_string(s) + " not assigned");
    }
    roles_.push_back(*assigned[s]);
  }
  fallback_ = undefined_fallback;
}

StatePartition StatePartition::hamming(std::size_t alphabet_size) {
  if (alphabet_size == 0) throw Error(ErrorCode::InvalidPartition, "empty alphabet");
  return StatePartition(std::vector<StateRole>(alphabet_size, StateRole::Interest), 0.0);
}

StatePartition StatePartition::jaccard(std::size_t alphabet_size, StateId one) {
  if (one >= alphabet_size) {
    throw Error(ErrorCode::InvalidPartition, "state id " + std::to_string(one) + " outside alphabet");
  }
  std::vector<StateRole> roles(alphabet_size, StateRole::Other);
  roles[one] = StateRole::Interest;
  return StatePartition(std::move(roles), 0.0);
}

std::vector<StateId> StatePartition::collect(StateRole r) const {
  std::vector<StateId> out;
  for (std::size_t s = 0; s < roles_.size(); ++s) {
    if (roles_[s] == r) out.push_back(static_cast<StateId>(s));
  }
  return out;
}

}  // namespace sth
