#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sth/time.hpp"

namespace sth {

using StateId = std::uint32_t;

/// Label <-> id mapping for a finite state space. The id of a label is its
/// position in the label list.
class StateAlphabet {
 public:
  explicit StateAlphabet(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(StateId id) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Throws UnknownStateId when the label is not part of the alphabet.
  StateId id_of(std::string_view label) const;
  bool contains(std::string_view label) const;

  friend bool operator==(const StateAlphabet& a, const StateAlphabet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, StateId> index_;
};

using AlphabetPtr = std::shared_ptr<const StateAlphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> labels);

/// Shared {"0", "1"} alphabet used by the synthetic generators.
const AlphabetPtr& binary_alphabet();

/// True when both pointers designate the same alphabet or equal label lists.
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

struct Point {
  Timestamp time;
  StateId state;
};

class SteTs;

/// Builds a validated series. With `simplify`, runs of equal consecutive
/// states are merged first (earliest timestamp kept); without it such runs
/// are rejected with ConsecutiveEqualStates.
SteTs make_series(AlphabetPtr alphabet, Timestamp start, Timestamp end,
                  std::span<const Point> points, bool simplify = false);

/// State transition event timeseries.
///
/// State `states()[k]` holds on [times()[k], times()[k+1]) with the end time
/// closing the last interval. Instances are immutable and only obtainable
/// through `make_series`, so every live object satisfies:
///   - times()[0] == start(), times strictly increasing, last time < end()
///   - consecutive states differ
///   - every state id is < alphabet().size()
class SteTs {
 public:
  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
  const StateAlphabet& alphabet() const noexcept { return *alphabet_; }
  Timestamp start() const noexcept { return times_.front(); }
  Timestamp end() const noexcept { return times_.back(); }
  Duration duration() const noexcept { return end() - times_.front(); }

  /// Number of transition events (n); the series holds n + 1 states.
  std::size_t event_count() const noexcept { return times_.size() - 2; }

  std::span<const Timestamp> times() const noexcept { return {times_.data(), times_.size() - 1}; }

  /// times() followed by end(): the n + 2 interval bounds.
  std::span<const Timestamp> bounds() const noexcept { return times_; }
  std::span<const StateId> states() const noexcept { return states_; }

  friend bool operator==(const SteTs& a, const SteTs& b) {
    return a.times_ == b.times_ && a.states_ == b.states_ &&
           same_alphabet(a.alphabet_, b.alphabet_);
  }

 private:
  SteTs(AlphabetPtr alphabet, std::vector<Timestamp> bounds, std::vector<StateId> states)
      : alphabet_(std::move(alphabet)), times_(std::move(bounds)), states_(std::move(states)) {}

  friend SteTs make_series(AlphabetPtr, Timestamp, Timestamp, std::span<const Point>, bool);

  AlphabetPtr alphabet_;
  std::vector<Timestamp> times_;  // event times, then end
  std::vector<StateId> states_;
};

/// State holding at `t`. Throws OutOfRange unless start <= t < end.
StateId value_at(const SteTs& s, Timestamp t);

/// Relabels every state through `mapping` (indexed by source state id) and
/// merges the resulting runs of equal states. Start and end are preserved.
SteTs map_states(const SteTs& s, std::span<const StateId> mapping, AlphabetPtr target);

/// Convenience overload mapping labels to labels.
SteTs map_states(const SteTs& s,
                 const std::function<std::string(std::string_view)>& mapping,
                 AlphabetPtr target);

}  // namespace sth
