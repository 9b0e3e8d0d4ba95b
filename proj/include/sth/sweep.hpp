#pragma once

#include <cstddef>
#include <iterator>

#include "sth/series.hpp"

namespace sth {

/// One interval of the merged boundary set of two series: its duration and
/// the state each series holds on it.
struct IntervalOverlap {
  Duration duration;
  StateId state_i;
  StateId state_j;

  friend bool operator==(const IntervalOverlap&, const IntervalOverlap&) = default;
};

/// Throws MismatchedSpan / MismatchedAlphabet unless both series can be
/// swept together.
void check_comparable(const SteTs& a, const SteTs& b);

/// Visits the merged intervals of `a` and `b` in time order. Assumes
/// check_comparable(a, b) has passed. This is the hot loop behind every
/// temporal metric: a two-pointer merge over both timestamp arrays, O(n + m),
/// without materializing anything.
template <typename Visitor>
void for_each_overlap(const SteTs& a, const SteTs& b, Visitor&& visit) {
  // Bounds end with `end`, so ta[i + 1] is valid for every state index.
  const Timestamp* ta = a.bounds().data();
  const Timestamp* tb = b.bounds().data();
  const StateId* sa = a.states().data();
  const StateId* sb = b.states().data();
  const Timestamp end = a.end();

  std::size_t i = 0;
  std::size_t j = 0;
  Timestamp cursor = ta[0];
  while (cursor < end) {
    const Timestamp next_a = ta[i + 1];
    const Timestamp next_b = tb[j + 1];
    const Timestamp next = next_a < next_b ? next_a : next_b;
    visit(IntervalOverlap{next - cursor, sa[i], sb[j]});
    i += next_a == next;
    j += next_b == next;
    cursor = next;
  }
}

/// Lazily evaluated range over the merged intervals of two series.
///
///   for (const IntervalOverlap& iv : MergedIntervals(a, b)) { ... }
///
/// Both series must outlive the range.
class MergedIntervals {
 public:
  /// Throws MismatchedSpan / MismatchedAlphabet.
  MergedIntervals(const SteTs& a, const SteTs& b);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = IntervalOverlap;
    using difference_type = std::ptrdiff_t;
    using pointer = const IntervalOverlap*;
    using reference = const IntervalOverlap&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class MergedIntervals;
    iterator(const SteTs* a, const SteTs* b) : a_(a), b_(b), cursor_(a->start()) { advance(); }
    void advance();

    const SteTs* a_ = nullptr;
    const SteTs* b_ = nullptr;
    std::size_t i_ = 0;
    std::size_t j_ = 0;
    Timestamp cursor_{};
    IntervalOverlap current_{};
    bool done_ = true;
  };

  iterator begin() const { return iterator(a_, b_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  const SteTs* a_;
  const SteTs* b_;
};

inline MergedIntervals merged_intervals(const SteTs& a, const SteTs& b) {
  return MergedIntervals(a, b);
}

}  // namespace sth
