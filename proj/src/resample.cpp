#include "sth/resample.hpp"

#include <algorithm>
#include <string>

#include "sth/error.hpp"
#include "sth/sweep.hpp"

namespace sth {
namespace {

// Forward-only cursor answering value_at for non-decreasing query times.
class StateCursor {
 public:
  StateCursor(const SteTs& s, Timestamp first)
      : times_(s.times()), states_(s.states()) {
    const auto it = std::upper_bound(times_.begin(), times_.end(), first);
    index_ = static_cast<std::size_t>(it - times_.begin()) - 1;
  }

  StateId at(Timestamp t) {
    while (index_ + 1 < times_.size() && times_[index_ + 1] <= t) ++index_;
    return states_[index_];
  }

 private:
  std::span<const Timestamp> times_;
  std::span<const StateId> states_;
  std::size_t index_ = 0;
};

Timestamp origin_of(const SteTs& s, const ResampleConfig& cfg) {
  return cfg.origin.value_or(s.start());
}

}  // namespace

std::uint64_t sample_count(const SteTs& s, const ResampleConfig& cfg) {
  if (cfg.period.ticks == 0) throw Error(ErrorCode::InvalidPeriod, "period must be positive");
  if (cfg.period > s.duration()) {
    throw Error(ErrorCode::InvalidPeriod, "period " + std::to_string(cfg.period.ticks) +
                                              " ns exceeds series duration " +
                                              std::to_string(s.duration().ticks) + " ns");
  }
  const Timestamp origin = origin_of(s, cfg);
  if (origin < s.start() || origin >= s.end()) {
    throw Error(ErrorCode::InvalidPeriod, "origin outside the series span");
  }
  return (s.end() - origin).ticks / cfg.period.ticks;
}

std::vector<StateId> resample(const SteTs& s, const ResampleConfig& cfg) {
  const std::uint64_t count = sample_count(s, cfg);
  const Timestamp origin = origin_of(s, cfg);
  std::vector<StateId> out;
  out.reserve(count);
  StateCursor cursor(s, origin);
  Timestamp t = origin;
  for (std::uint64_t k = 0; k < count; ++k, t = t + cfg.period) out.push_back(cursor.at(t));
  return out;
}

ResampledHamming resampled_hamming(const SteTs& a, const SteTs& b, const ResampleConfig& cfg) {
  check_comparable(a, b);
  const std::uint64_t count = sample_count(a, cfg);
  const Timestamp origin = origin_of(a, cfg);
  StateCursor ca(a, origin);
  StateCursor cb(b, origin);
  std::uint64_t mismatches = 0;
  Timestamp t = origin;
  for (std::uint64_t k = 0; k < count; ++k, t = t + cfg.period) {
    mismatches += static_cast<std::uint64_t>(ca.at(t) != cb.at(t));
  }
  ResampledHamming out;
  out.mismatches = mismatches;
  out.samples = count;
  out.nh = static_cast<double>(count - mismatches) / static_cast<double>(count);
  out.nhd = 1.0 - out.nh;
  return out;
}

ResampledJaccard resampled_jaccard(const SteTs& a, const SteTs& b, const ResampleConfig& cfg,
                                   StateId one) {
  check_comparable(a, b);
  if (one >= a.alphabet().size()) {
    throw Error(ErrorCode::UnknownStateId, "designated state id " + std::to_string(one));
  }
  const std::uint64_t count = sample_count(a, cfg);
  const Timestamp origin = origin_of(a, cfg);
  StateCursor ca(a, origin);
  StateCursor cb(b, origin);
  ResampledJaccard out;
  Timestamp t = origin;
  for (std::uint64_t k = 0; k < count; ++k, t = t + cfg.period) {
    const bool ia = ca.at(t) == one;
    const bool ib = cb.at(t) == one;
    out.both_one += static_cast<std::uint64_t>(ia && ib);
    out.one_zero += static_cast<std::uint64_t>(ia && !ib);
    out.zero_one += static_cast<std::uint64_t>(!ia && ib);
  }
  const std::uint64_t den = out.both_one + out.one_zero + out.zero_one;
  out.j = den == 0 ? 1.0 : static_cast<double>(out.both_one) / static_cast<double>(den);
  out.jd = 1.0 - out.j;
  return out;
}

}  // namespace sth
