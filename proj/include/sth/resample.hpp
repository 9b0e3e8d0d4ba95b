#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sth/series.hpp"

namespace sth {

/// Uniform sampling grid: samples at origin + k * period.
struct ResampleConfig {
  Duration period;
  std::optional<Timestamp> origin;  // defaults to the series start
};

/// Number of samples the grid yields on `s`: floor((end - origin) / period).
/// Throws InvalidPeriod for a zero period, a period longer than the series,
/// or an origin outside [start, end).
std::uint64_t sample_count(const SteTs& s, const ResampleConfig& cfg);

/// Instant (left-edge) sampling: sample k is value_at(s, origin + k * period).
std::vector<StateId> resample(const SteTs& s, const ResampleConfig& cfg);

struct ResampledHamming {
  std::uint64_t mismatches = 0;  // HD
  std::uint64_t samples = 0;     // n^(P)
  double nh = 1.0;               // matching samples / n^(P)
  double nhd = 0.0;              // 1 - nh, the same rounding path as nTHD
};

/// Hamming distance between the two resampled series, computed bucket by
/// bucket with one event cursor per series (O(n^(P) + n + m), no buffers).
ResampledHamming resampled_hamming(const SteTs& a, const SteTs& b, const ResampleConfig& cfg);

struct ResampledJaccard {
  std::uint64_t both_one = 0;
  std::uint64_t one_zero = 0;
  std::uint64_t zero_one = 0;
  double j = 1.0;
  double jd = 0.0;
};

/// Jaccard index over the resampled series, treating `one` as presence and
/// every other state as absence. J = 1 when neither series is ever present.
ResampledJaccard resampled_jaccard(const SteTs& a, const SteTs& b, const ResampleConfig& cfg,
                                   StateId one);

}  // namespace sth
