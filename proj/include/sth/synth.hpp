#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <variant>

#include "sth/series.hpp"

namespace sth {

/// Exact non-negative ratio, used for duty cycles and lag fractions so that
/// 1/3 is not truncated to a decimal.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  /// floor(d * num / den) in nanoseconds.
  Duration of(Duration d) const;
};

/// Parses "p/q", an integer, or a plain decimal ("0.6", "0.3333333333")
/// into an exact fraction. Throws InvalidGenSpec.
Fraction parse_fraction(std::string_view text);

struct Span {
  Timestamp start;
  Timestamp end;
};

/// Portable seeded randomness: std::mt19937_64 (fully specified by the
/// standard) with rejection sampling for bounded draws, so generated series
/// are identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

/// Rts(n): n binary state changes at distinct uniform instants strictly
/// inside the span; initial state from the seed.
SteTs gen_random(std::size_t n, Span span, std::uint64_t seed);

struct TicksParams {
  Duration spacing = Duration::minutes(5);
  Duration jitter_min = Duration::milliseconds(1);
  Duration jitter_max = Duration::milliseconds(200);
};

/// Tk: floor(T / spacing) alternating binary events, the k-th (k >= 1) at
/// start + (k - 1) * spacing + U[jitter_min, jitter_max].
SteTs gen_ticks(Span span, std::uint64_t seed, const TicksParams& params = {});

/// Square wave: state 1 on [start + lag + k*period, ... + duty*period) for
/// every integer k, 0 elsewhere, clipped to the span. The high time is
/// truncated to whole nanoseconds.
SteTs gen_periodic(Duration period, Fraction duty, Duration lag, Span span);

struct RandomSpec {
  std::size_t n = 0;
};
struct TicksSpec {
  TicksParams params;
};
struct PeriodicSpec {
  Duration period;
  Fraction duty{1, 2};
  Fraction lag_fraction{0, 1};
};

struct GenSpec {
  std::variant<RandomSpec, TicksSpec, PeriodicSpec> kind;
  Span span;
  std::uint64_t seed = 0;
};

/// Validates the spec (positive span and parameters, duty in (0, 1],
/// lag fraction in [0, 1)) and dispatches to the matching generator.
SteTs generate(const GenSpec& spec);

}  // namespace sth
