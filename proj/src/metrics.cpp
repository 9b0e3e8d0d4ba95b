#include "sth/metrics.hpp"

#include <string>
#include <vector>

#include "sth/error.hpp"
#include "sth/sweep.hpp"

namespace sth {
namespace {

// State similarity on S_I. Identity only; a weight table would replace this.
inline std::uint64_t state_similarity(StateId a, StateId b) { return a == b ? 1 : 0; }

inline double ratio(Duration num, Duration den) {
  return static_cast<double>(num.ticks) / static_cast<double>(den.ticks);
}

}  // namespace

TemporalHamming temporal_hamming(const SteTs& a, const SteTs& b) {
  check_comparable(a, b);
  std::uint64_t same = 0;
  for_each_overlap(a, b, [&](const IntervalOverlap& iv) {
    same += iv.duration.ticks * static_cast<std::uint64_t>(iv.state_i == iv.state_j);
  });
  const Duration total = a.duration();
  TemporalHamming out{};
  out.th = Duration{same};
  out.nth = ratio(out.th, total);
  out.thd = total - out.th;
  out.nthd = 1.0 - out.nth;
  return out;
}

TemporalJaccard temporal_jaccard(const SteTs& a, const SteTs& b, StateId one) {
  check_comparable(a, b);
  if (one >= a.alphabet().size()) {
    throw Error(ErrorCode::UnknownStateId, "designated state id " + std::to_string(one));
  }
  std::uint64_t both_one = 0;
  std::uint64_t both_zero = 0;
  for_each_overlap(a, b, [&](const IntervalOverlap& iv) {
    const bool ia = iv.state_i == one;
    const bool ib = iv.state_j == one;
    both_one += iv.duration.ticks * static_cast<std::uint64_t>(ia && ib);
    both_zero += iv.duration.ticks * static_cast<std::uint64_t>(!ia && !ib);
  });
  TemporalJaccard out{};
  out.both_one = Duration{both_one};
  out.denominator = a.duration() - Duration{both_zero};
  out.tj = out.denominator.ticks == 0 ? 1.0 : ratio(out.both_one, out.denominator);
  out.tjd = 1.0 - out.tj;
  return out;
}

SthSums sth_sums(const SteTs& a, const SteTs& b, const StatePartition& p) {
  check_comparable(a, b);
  if (p.alphabet_size() != a.alphabet().size()) {
    throw Error(ErrorCode::InvalidPartition,
                "partition covers " + std::to_string(p.alphabet_size()) + " states, alphabet has " +
                    std::to_string(a.alphabet().size()));
  }
  // Per-state 0/1 tables keep the visitor free of data-dependent branches.
  const auto roles = p.roles();
  std::vector<std::uint64_t> interest(roles.size());
  std::vector<std::uint64_t> kept(roles.size());
  for (std::size_t k = 0; k < roles.size(); ++k) {
    interest[k] = roles[k] == StateRole::Interest;
    kept[k] = roles[k] != StateRole::Excluded;
  }
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 0;
  std::uint64_t unexcluded = 0;
  for_each_overlap(a, b, [&](const IntervalOverlap& iv) {
    const std::uint64_t keep = kept[iv.state_i] & kept[iv.state_j];
    const std::uint64_t ia = interest[iv.state_i];
    const std::uint64_t ib = interest[iv.state_j];
    unexcluded |= keep;
    numerator += (keep & ia & ib) * state_similarity(iv.state_i, iv.state_j) * iv.duration.ticks;
    denominator += (keep & (ia | ib)) * iv.duration.ticks;
  });
  return {Duration{numerator}, Duration{denominator}, unexcluded != 0};
}

MetricValue sth(const SteTs& a, const SteTs& b, const StatePartition& p) {
  const SthSums sums = sth_sums(a, b, p);
  if (!sums.has_unexcluded_interval) return {p.undefined_fallback(), false};
  // Once an E-free interval exists, an empty denominator means no E-free
  // interval touches S_I.
  if (sums.denominator.ticks == 0) return {1.0, true};
  return {ratio(sums.numerator, sums.denominator), true};
}

MetricKind parse_metric_kind(std::string_view name) {
  if (name == "temporal_hamming" || name == "thamming") return MetricKind::TemporalHamming;
  if (name == "temporal_jaccard" || name == "tjaccard") return MetricKind::TemporalJaccard;
  if (name == "sth") return MetricKind::Sth;
  if (name == "resampled_hamming" || name == "rhamming") return MetricKind::ResampledHamming;
  if (name == "resampled_jaccard" || name == "rjaccard") return MetricKind::ResampledJaccard;
  throw Error(ErrorCode::UnknownMetric, "'" + std::string(name) + "'");
}

DistanceFunction make_metric(MetricKind kind, const MetricParams& params) {
  const auto require = [](bool present, const char* what) {
    if (!present) throw Error(ErrorCode::MissingParams, what);
  };
  switch (kind) {
    case MetricKind::TemporalHamming:
      return [](const SteTs& a, const SteTs& b) {
        return MetricValue{temporal_hamming(a, b).nth, true};
      };
    case MetricKind::TemporalJaccard: {
      require(params.one.has_value(), "temporal_jaccard needs a designated 'one' state");
      const StateId one = *params.one;
      return [one](const SteTs& a, const SteTs& b) {
        return MetricValue{temporal_jaccard(a, b, one).tj, true};
      };
    }
    case MetricKind::Sth: {
      require(params.partition.has_value(), "sth needs a state partition");
      const StatePartition partition = *params.partition;
      return [partition](const SteTs& a, const SteTs& b) { return sth(a, b, partition); };
    }
    case MetricKind::ResampledHamming: {
      require(params.resample.has_value(), "resampled_hamming needs a sampling period");
      const ResampleConfig cfg = *params.resample;
      return [cfg](const SteTs& a, const SteTs& b) {
        return MetricValue{resampled_hamming(a, b, cfg).nh, true};
      };
    }
    case MetricKind::ResampledJaccard: {
      require(params.resample.has_value(), "resampled_jaccard needs a sampling period");
      require(params.one.has_value(), "resampled_jaccard needs a designated 'one' state");
      const ResampleConfig cfg = *params.resample;
      const StateId one = *params.one;
      return [cfg, one](const SteTs& a, const SteTs& b) {
        return MetricValue{resampled_jaccard(a, b, cfg, one).j, true};
      };
    }
  }
  throw Error(ErrorCode::UnknownMetric, "unhandled metric kind");
}

DistanceFunction make_metric(std::string_view name, const MetricParams& params) {
  return make_metric(parse_metric_kind(name), params);
}

}  // namespace sth
