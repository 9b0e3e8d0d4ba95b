#pragma once

// Brute-force reference implementations used as independent oracles. They
// deliberately avoid the library's sweep and cursor code: boundaries come
// from a std::set union, states from a linear scan of the raw arrays.

#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "sth/series.hpp"

namespace sth::oracle {

inline StateId scan_state(const SteTs& s, std::int64_t t) {
  StateId v = s.states()[0];
  for (std::size_t k = 0; k < s.times().size(); ++k) {
    if (s.times()[k].ticks <= t) v = s.states()[k];
  }
  return v;
}

struct Piece {
  std::int64_t length;
  StateId a;
  StateId b;
};

/// Merged intervals from the sorted union of all boundaries.
inline std::vector<Piece> merged(const SteTs& a, const SteTs& b) {
  std::set<std::int64_t> bounds{a.end().ticks};
  for (auto t : a.times()) bounds.insert(t.ticks);
  for (auto t : b.times()) bounds.insert(t.ticks);
  std::vector<Piece> out;
  for (auto it = bounds.begin(); std::next(it) != bounds.end(); ++it) {
    out.push_back({*std::next(it) - *it, scan_state(a, *it), scan_state(b, *it)});
  }
  return out;
}

/// (state_a, state_b) -> total duration, obtained by stepping through every
/// tick of length `step` (all boundaries must be multiples of it).
inline std::map<std::pair<StateId, StateId>, std::int64_t> tick_histogram(const SteTs& a, const SteTs& b,
                                                                           std::int64_t step) {
  std::map<std::pair<StateId, StateId>, std::int64_t> h;
  std::size_t ia = 0, ib = 0;
  for (std::int64_t t = a.start().ticks; t < a.end().ticks; t += step) {
    // Plain scans (not value_at) keep the oracle independent.
    while (ia + 1 < a.times().size() && a.times()[ia + 1].ticks <= t) ++ia;
    while (ib + 1 < b.times().size() && b.times()[ib + 1].ticks <= t) ++ib;
    h[{a.states()[ia], b.states()[ib]}] += step;
  }
  return h;
}

inline std::map<std::pair<StateId, StateId>, std::int64_t> piece_histogram(const std::vector<Piece>& ps) {
  std::map<std::pair<StateId, StateId>, std::int64_t> h;
  for (const auto& p : ps) h[{p.a, p.b}] += p.length;
  return h;
}

}  // namespace sth::oracle
