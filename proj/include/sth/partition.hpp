#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sth/series.hpp"

namespace sth {

enum class StateRole : std::uint8_t { Interest, Other, Excluded };

/// Split of an alphabet into states of interest (S_I), other states (S_O)
/// and excluded states (S_E), plus the similarity reported when every
/// compared interval touches an excluded state.
///
/// The three sets are pairwise disjoint, cover the alphabet, and S_I is
/// non-empty. The state similarity is the identity.
class StatePartition {
 public:
  /// Throws InvalidPartition on overlap, incomplete cover, empty interest set,
  /// out-of-range ids or a fallback outside [0, 1].
  StatePartition(std::size_t alphabet_size, std::span<const StateId> interest,
                 std::span<const StateId> other, std::span<const StateId> excluded,
                 double undefined_fallback = 0.0);

  /// S_I = S: reduces STH to the normalized temporal Hamming similarity.
  static StatePartition hamming(std::size_t alphabet_size);

  /// S_I = {one}, S_O = everything else: reduces STH to temporal Jaccard.
  static StatePartition jaccard(std::size_t alphabet_size, StateId one);

  std::size_t alphabet_size() const noexcept { return roles_.size(); }
  StateRole role(StateId s) const { return roles_.at(s); }
  std::span<const StateRole> roles() const noexcept { return roles_; }
  double undefined_fallback() const noexcept { return fallback_; }

  std::vector<StateId> interest() const { return collect(StateRole::Interest); }
  std::vector<StateId> other() const { return collect(StateRole::Other); }
  std::vector<StateId> excluded() const { return collect(StateRole::Excluded); }

 private:
  StatePartition(std::vector<StateRole> roles, double fallback)
      : roles_(std::move(roles)), fallback_(fallback) {}
  std::vector<StateId> collect(StateRole r) const;

  std::vector<StateRole> roles_;
  double fallback_ = 0.0;
};

}  // namespace sth
