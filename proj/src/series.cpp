#include "sth/series.hpp"

#include <algorithm>

#include "sth/error.hpp"

namespace sth {

StateAlphabet::StateAlphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k].empty()) {
      throw Error(ErrorCode::InvalidAlphabet, "empty state label at position " + std::to_string(k));
    }
    if (!index_.emplace(labels_[k], static_cast<StateId>(k)).second) {
      throw Error(ErrorCode::InvalidAlphabet, "duplicate state label '" + labels_[k] + "'");
    }
  }
}

const std::string& StateAlphabet::label(StateId id) const {
  if (id >= labels_.size()) {
    throw Error(ErrorCode::UnknownStateId, "state id " + std::to_string(id));
  }
  return labels_[id];
}

StateId StateAlphabet::id_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) {
    throw Error(ErrorCode::UnknownStateId, "state '" + std::string(label) + "' not in alphabet");
  }
  return it->second;
}

bool StateAlphabet::contains(std::string_view label) const {
  return index_.contains(std::string(label));
}

AlphabetPtr make_alphabet(std::vector<std::string> labels) {
  return std::make_shared<const StateAlphabet>(std::move(labels));
}

const AlphabetPtr& binary_alphabet() {
  static const AlphabetPtr alphabet = make_alphabet({"0", "1"});
  return alphabet;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

SteTs make_series(AlphabetPtr alphabet, Timestamp start, Timestamp end,
                  std::span<const Point> points, bool simplify) {
  if (!alphabet) throw Error(ErrorCode::InvalidAlphabet, "null alphabet");
  if (points.empty()) throw Error(ErrorCode::EmptySeries, "no points");
  if (points.front().time != start) {
    throw Error(ErrorCode::FirstPointNotAtStart,
                "first point at " + std::to_string(points.front().time.ticks) + ", start is " +
                    std::to_string(start.ticks));
  }

  std::vector<Timestamp> times;
  std::vector<StateId> states;
  times.reserve(points.size() + 1);
  states.reserve(points.size());

  for (std::size_t k = 0; k < points.size(); ++k) {
    const Point& p = points[k];
    if (p.state >= alphabet->size()) {
      throw Error(ErrorCode::UnknownStateId, "state id " + std::to_string(p.state) +
                                                 " at point " + std::to_string(k));
    }
    if (k > 0 && p.time <= points[k - 1].time) {
      throw Error(ErrorCode::TimestampsNotStrictlyIncreasing,
                  "point " + std::to_string(k) + " at " + std::to_string(p.time.ticks));
    }
    if (p.time >= end) {
      throw Error(ErrorCode::EventAtOrAfterEnd,
                  "point " + std::to_string(k) + " at " + std::to_string(p.time.ticks) +
                      ", end is " + std::to_string(end.ticks));
    }
    if (!states.empty() && states.back() == p.state) {
      if (simplify) continue;
      throw Error(ErrorCode::ConsecutiveEqualStates,
                  "point " + std::to_string(k) + " repeats state " + std::to_string(p.state));
    }
    times.push_back(p.time);
    states.push_back(p.state);
  }
  times.push_back(end);
  return SteTs(std::move(alphabet), std::move(times), std::move(states));
}

StateId value_at(const SteTs& s, Timestamp t) {
  if (t < s.start() || t >= s.end()) {
    throw Error(ErrorCode::OutOfRange, "t=" + std::to_string(t.ticks) + " outside [" +
                                           std::to_string(s.start().ticks) + ", " +
                                           std::to_string(s.end().ticks) + ")");
  }
  const auto times = s.times();
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  return s.states()[static_cast<std::size_t>(it - times.begin()) - 1];
}

SteTs map_states(const SteTs& s, std::span<const StateId> mapping, AlphabetPtr target) {
  if (!target) throw Error(ErrorCode::InvalidAlphabet, "null target alphabet");
  if (mapping.size() < s.alphabet().size()) {
    throw Error(ErrorCode::UnknownStateId, "mapping covers " + std::to_string(mapping.size()) +
                                               " of " + std::to_string(s.alphabet().size()) +
                                               " states");
  }
  for (std::size_t k = 0; k < s.alphabet().size(); ++k) {
    if (mapping[k] >= target->size()) {
      throw Error(ErrorCode::UnknownTargetState, "state " + s.alphabet().label(k) + " maps to id " +
                                                     std::to_string(mapping[k]));
    }
  }
  std::vector<Point> points;
  points.reserve(s.times().size());
  for (std::size_t k = 0; k < s.times().size(); ++k) {
    points.push_back({s.times()[k], mapping[s.states()[k]]});
  }
  return make_series(std::move(target), s.start(), s.end(), points, true);
}

SteTs map_states(const SteTs& s, const std::function<std::string(std::string_view)>& mapping,
                 AlphabetPtr target) {
  if (!target) throw Error(ErrorCode::InvalidAlphabet, "null target alphabet");
  std::vector<StateId> ids;
  ids.reserve(s.alphabet().size());
  for (const auto& label : s.alphabet().labels()) {
    const std::string mapped = mapping(label);
    if (!target->contains(mapped)) {
      throw Error(ErrorCode::UnknownTargetState, "state " + label + " maps to '" + mapped + "'");
    }
    ids.push_back(target->id_of(mapped));
  }
  return map_states(s, ids, std::move(target));
}

}  // namespace sth
