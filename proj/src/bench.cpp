#include "sth/bench.hpp"

#include <cstdio>
#include <ostream>

#include "sth/metrics.hpp"
#include "sth/resample.hpp"
#include "sth/synth.hpp"

namespace sth::bench {
namespace {

constexpr Span kMonth{Timestamp{0}, Timestamp{0} + Duration::days(30)};

struct Family {
  const char* name;
  const SteTs* a;
  const SteTs* b;
};

}  // namespace

std::pair<SteTs, SteTs> periodic_pair() {
  const Duration period = Duration::minutes(14);
  const Fraction duty{3, 5};
  return {gen_periodic(period, duty, Duration{0}, kMonth),
          gen_periodic(period, duty, Fraction{1, 3}.of(period), kMonth)};
}

Result events(const std::vector<std::size_t>& n_grid, int runs, Duration period,
              std::uint64_t seed) {
  const StatePartition hamming = StatePartition::hamming(2);
  const ResampleConfig cfg{period, std::nullopt};
  const SteTs rts1 = gen_random(1, kMonth, seed + 2);
  const SteTs tk = gen_ticks(kMonth, seed + 3);

  Result out;
  for (std::size_t n : n_grid) {
    const SteTs a = gen_random(n, kMonth, seed);
    const SteTs b = gen_random(n, kMonth, seed + 1);
    const Family families[] = {{"rts_vs_rts", &a, &b}, {"rts_vs_rts1", &a, &rts1}, {"rts_vs_tk", &a, &tk}};
    for (const Family& f : families) {
      const double sth_value = sth(*f.a, *f.b, hamming).distance();
      const Timing t_sth = time_calls(runs, [&] { return sth(*f.a, *f.b, hamming).similarity; });
      const double rh_value = resampled_hamming(*f.a, *f.b, cfg).nhd;
      const Timing t_rh = time_calls(runs, [&] { return resampled_hamming(*f.a, *f.b, cfg).nhd; });
      const double x = static_cast<double>(n);
      const double ratio = t_rh.mean_s / t_sth.mean_s;
      out.rows.push_back({"events", f.name, "sth", x, t_sth.mean_s, t_sth.std_s, sth_value});
      out.rows.push_back({"events", f.name, "rhamming", x, t_rh.mean_s, t_rh.std_s, rh_value});
      out.rows.push_back({"events", f.name, "ratio", x, ratio, 0.0, ratio});
    }
  }
  return out;
}

Result period(const std::vector<Duration>& period_grid, int runs) {
  const auto [ps0, ps13] = periodic_pair();
  const StatePartition hamming = StatePartition::hamming(2);
  Result out;
  const Timing t_sth = time_calls(runs, [&] { return sth(ps0, ps13, hamming).similarity; });
  out.rows.push_back({"period", "ps0_vs_ps13", "sth", 0.0, t_sth.mean_s, t_sth.std_s,
                      sth(ps0, ps13, hamming).distance()});
  for (Duration p : period_grid) {
    const ResampleConfig cfg{p, std::nullopt};
    const Timing t = time_calls(runs, [&] { return resampled_hamming(ps0, ps13, cfg).nhd; });
    out.rows.push_back({"period", "ps0_vs_ps13", "rhamming", p.seconds_f(), t.mean_s, t.std_s,
                        resampled_hamming(ps0, ps13, cfg).nhd});
  }
  return out;
}

Result precision(const std::vector<Duration>& period_grid) {
  const auto [ps0, ps13] = periodic_pair();
  const double sthd = sth(ps0, ps13, StatePartition::hamming(2)).distance();
  Result out;
  out.rows.push_back({"precision", "ps0_vs_ps13", "sth", 0.0, 0.0, 0.0, sthd});
  for (Duration p : period_grid) {
    const double nhd = resampled_hamming(ps0, ps13, ResampleConfig{p, std::nullopt}).nhd;
    out.rows.push_back({"precision", "ps0_vs_ps13", "rhamming", p.seconds_f(), 0.0, 0.0, nhd});
    out.rows.push_back({"precision", "ps0_vs_ps13", "distortion", p.seconds_f(), 0.0, 0.0,
                        nhd > sthd ? nhd - sthd : sthd - nhd});
  }
  return out;
}

void write_csv(std::ostream& out, const Result& r) {
  out << "experiment,pair,metric,x,mean_s,std_s,value\n";
  char buf[4][40];
  for (const Row& row : r.rows) {
    std::snprintf(buf[0], sizeof buf[0], "%.17g", row.x);
    std::snprintf(buf[1], sizeof buf[1], "%.17g", row.mean_s);
    std::snprintf(buf[2], sizeof buf[2], "%.17g", row.std_s);
    std::snprintf(buf[3], sizeof buf[3], "%.17g", row.value);
    out << row.experiment << ',' << row.pair << ',' << row.metric << ',' << buf[0] << ',' << buf[1]
        << ',' << buf[2] << ',' << buf[3] << '\n';
  }
}

}  // namespace sth::bench
