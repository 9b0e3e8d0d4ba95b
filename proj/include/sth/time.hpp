#pragma once

#include <compare>
#include <cstdint>

namespace sth {

/// Non-negative span of time in integer nanoseconds.
struct Duration {
  std::uint64_t ticks = 0;

  static constexpr Duration nanoseconds(std::uint64_t n) { return {n}; }
  static constexpr Duration milliseconds(std::uint64_t n) { return {n * 1'000'000ULL}; }
  static constexpr Duration seconds(std::uint64_t n) { return {n * 1'000'000'000ULL}; }
  static constexpr Duration minutes(std::uint64_t n) { return seconds(n * 60); }
  static constexpr Duration hours(std::uint64_t n) { return seconds(n * 3600); }
  static constexpr Duration days(std::uint64_t n) { return seconds(n * 86400); }

  constexpr double seconds_f() const { return static_cast<double>(ticks) * 1e-9; }

  friend constexpr auto operator<=>(Duration, Duration) = default;
  friend constexpr Duration operator+(Duration a, Duration b) { return {a.ticks + b.ticks}; }
  friend constexpr Duration operator-(Duration a, Duration b) { return {a.ticks - b.ticks}; }
  constexpr Duration& operator+=(Duration o) {
    ticks += o.ticks;
    return *this;
  }
};

/// Point in time: signed nanoseconds since the Unix epoch.
struct Timestamp {
  std::int64_t ticks = 0;

  friend constexpr auto operator<=>(Timestamp, Timestamp) = default;

  // Caller guarantees a >= b.
  friend constexpr Duration operator-(Timestamp a, Timestamp b) {
    return {static_cast<std::uint64_t>(a.ticks) - static_cast<std::uint64_t>(b.ticks)};
  }
  friend constexpr Timestamp operator+(Timestamp t, Duration d) {
    return {static_cast<std::int64_t>(static_cast<std::uint64_t>(t.ticks) + d.ticks)};
  }
};

}  // namespace sth
