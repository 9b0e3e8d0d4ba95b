#pragma once

// Shared helpers for the test binaries: compact series construction and
// seeded random series. Test-only; portability of the draws is irrelevant.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sth/series.hpp"

namespace sth::test {

inline constexpr std::int64_t kSec = 1'000'000'000;

inline Timestamp at_s(double seconds) { return Timestamp{static_cast<std::int64_t>(seconds * 1e9)}; }

/// Series on [0, end_s) seconds from (start_s, label) pairs.
inline SteTs series(const AlphabetPtr& alphabet, double end_s,
                    std::initializer_list<std::pair<double, const char*>> rows) {
  std::vector<Point> pts;
  for (const auto& [t, label] : rows) pts.push_back({at_s(t), alphabet->id_of(label)});
  return make_series(alphabet, at_s(0), at_s(end_s), pts);
}

inline AlphabetPtr letters(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back(std::string(1, static_cast<char>('A' + k)));
  return make_alphabet(labels);
}

/// Random series with `events` changes at distinct multiples of `grid` in
/// (start, end), each state drawn uniformly among the states that differ
/// from the previous one.
inline SteTs random_series(std::mt19937_64& rng, const AlphabetPtr& alphabet, std::size_t events,
                           Timestamp start, Timestamp end, std::int64_t grid = 1) {
  const std::int64_t slots = (end.ticks - start.ticks - 1) / grid;
  events = std::min<std::size_t>(events, static_cast<std::size_t>(slots));
  std::set<std::int64_t> picks;
  std::uniform_int_distribution<std::int64_t> slot(1, slots);
  while (picks.size() < events) picks.insert(slot(rng));
  const auto k = static_cast<StateId>(alphabet->size());
  std::uniform_int_distribution<StateId> any(0, k - 1);
  std::vector<Point> pts{{start, any(rng)}};
  for (std::int64_t p : picks) {
    StateId s = pts.back().state;
    if (k > 1) {
      std::uniform_int_distribution<StateId> shift(1, k - 1);
      s = (s + shift(rng)) % k;
    }
    pts.push_back({Timestamp{start.ticks + p * grid}, s});
  }
  return make_series(alphabet, start, end, pts, true);
}

}  // namespace sth::test
