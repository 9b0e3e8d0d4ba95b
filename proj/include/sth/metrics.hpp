#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "sth/partition.hpp"
#include "sth/resample.hpp"
#include "sth/series.hpp"

namespace sth {

/// Similarity in [0, 1]. `defined` is false only for the STH undefined case,
/// where `similarity` carries the partition's fallback.
struct MetricValue {
  double similarity = 1.0;
  bool defined = true;

  double distance() const { return 1.0 - similarity; }
};

struct TemporalHamming {
  Duration th;   // time both series agree
  double nth;    // th / T
  Duration thd;  // T - th
  double nthd;   // 1 - nth
};

TemporalHamming temporal_hamming(const SteTs& a, const SteTs& b);

struct TemporalJaccard {
  Duration both_one;     // numerator
  Duration denominator;  // T minus the time both are not `one`
  double tj;
  double tjd;
};

/// Temporal Jaccard with `one` as the present state; any other state counts
/// as absent. TJ = 1 when the denominator is empty.
TemporalJaccard temporal_jaccard(const SteTs& a, const SteTs& b, StateId one);

/// Exact integer sums behind one STH evaluation.
struct SthSums {
  Duration numerator;    // both in S_I and equal
  Duration denominator;  // pair in S_I^2 or S_I x S_O or S_O x S_I
  bool has_unexcluded_interval = false;
};

SthSums sth_sums(const SteTs& a, const SteTs& b, const StatePartition& p);

/// Selective temporal Hamming similarity:
///   - undefined (fallback, defined=false) when every interval touches S_E
///   - 1 when no E-free interval touches S_I
///   - numerator / denominator of `sth_sums` otherwise
MetricValue sth(const SteTs& a, const SteTs& b, const StatePartition& p);

inline double sth_distance(const SteTs& a, const SteTs& b, const StatePartition& p) {
  return sth(a, b, p).distance();
}

// ---------------------------------------------------------------------------
// Dispatch

enum class MetricKind { TemporalHamming, TemporalJaccard, Sth, ResampledHamming, ResampledJaccard };

/// Accepts the canonical names (temporal_hamming, temporal_jaccard, sth,
/// resampled_hamming, resampled_jaccard) and the CLI short forms (thamming,
/// tjaccard, rhamming, rjaccard). Throws UnknownMetric.
MetricKind parse_metric_kind(std::string_view name);

struct MetricParams {
  std::optional<StatePartition> partition;  // sth
  std::optional<StateId> one;               // temporal_jaccard, resampled_jaccard
  std::optional<ResampleConfig> resample;   // resampled_*
};

using DistanceFunction = std::function<MetricValue(const SteTs&, const SteTs&)>;

/// Binds a metric kind and its parameters into a callable returning the
/// similarity (use `.distance()`). Throws MissingParams when the kind's
/// required parameters are absent.
DistanceFunction make_metric(MetricKind kind, const MetricParams& params);
DistanceFunction make_metric(std::string_view name, const MetricParams& params);

}  // namespace sth
