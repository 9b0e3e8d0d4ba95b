#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sth/series.hpp"

namespace sth::bench {

struct Row {
  std::string experiment;
  std::string pair;
  std::string metric;
  double x = 0.0;
  double mean_s = 0.0;
  double std_s = 0.0;
  double value = 0.0;
};

struct Result {
  std::vector<Row> rows;
};

struct Timing {
  double mean_s = 0.0;
  double std_s = 0.0;
};

/// Wall-clock seconds per call of `f` over `runs` calls, after one untimed
/// warm-up call. `f` returns a double that is folded into a sink so the
/// call cannot be optimized away.
template <typename F>
Timing time_calls(int runs, F&& f) {
  volatile double sink = f();
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(runs));
  for (int r = 0; r < runs; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    sink = sink + f();
    const auto t1 = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double>(t1 - t0).count());
  }
  Timing t;
  for (double s : samples) t.mean_s += s;
  t.mean_s /= static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double ss = 0.0;
    for (double s : samples) ss += (s - t.mean_s) * (s - t.mean_s);
    t.std_s = std::sqrt(ss / static_cast<double>(samples.size() - 1));
  }
  return t;
}

/// The 30-day periodic pair used by the period and precision experiments:
/// 14 min period, 60 % duty, second wave lagged by a third of a period.
std::pair<SteTs, SteTs> periodic_pair();

/// Rts(n) vs Rts(n), Rts(n) vs Rts(1) and Rts(n) vs Tk over 30 days, timing
/// STH (Hamming configuration) and nHD at `period` for every n. Emits
/// `sth` and `rhamming` rows plus one `ratio` row per (pair, n).
Result events(const std::vector<std::size_t>& n_grid, int runs, Duration period,
              std::uint64_t seed);

/// PS_0 vs PS_1/3 over 30 days: nHD timing per period, and one STH row.
Result period(const std::vector<Duration>& period_grid, int runs);

/// PS_0 vs PS_1/3 over 30 days: nHD per period, STHD once, and the
/// distortion |nHD - STHD| per period. Timing columns are zero.
Result precision(const std::vector<Duration>& period_grid);

/// `experiment,pair,metric,x,mean_s,std_s,value`
void write_csv(std::ostream& out, const Result& r);

}  // namespace sth::bench
