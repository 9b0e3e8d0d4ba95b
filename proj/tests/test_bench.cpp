#include "doctest.h"

#include <cmath>
#include <set>
#include <sstream>

#include "sth/bench.hpp"

using namespace sth;

TEST_CASE("events experiment layout") {
  const bench::Result r = bench::events({10, 100}, 2, Duration::minutes(5), 1);
  std::size_t timing = 0, ratios = 0;
  std::set<std::string> pairs;
  for (const auto& row : r.rows) {
    CHECK(row.experiment == "events");
    CHECK(row.mean_s >= 0.0);
    pairs.insert(row.pair);
    if (row.metric == "ratio") ++ratios;
    else ++timing;
  }
  CHECK(timing == 3 * 2 * 2);
  CHECK(ratios == 3 * 2);
  CHECK(pairs == std::set<std::string>{"rts_vs_rts", "rts_vs_rts1", "rts_vs_tk"});

  // Metric values are reproducible for a fixed seed.
  const bench::Result again = bench::events({10, 100}, 1, Duration::minutes(5), 1);
  for (std::size_t k = 0; k < r.rows.size(); ++k) {
    if (r.rows[k].metric != "ratio") CHECK(r.rows[k].value == again.rows[k].value);
  }
}

TEST_CASE("period experiment has a single STH row") {
  const bench::Result r = bench::period({Duration::minutes(14), Duration::minutes(1)}, 1);
  std::size_t sth_rows = 0;
  for (const auto& row : r.rows) sth_rows += row.metric == "sth";
  CHECK(sth_rows == 1);
  CHECK(r.rows.size() == 3);
}

TEST_CASE("precision experiment") {
  const bench::Result r = bench::precision({Duration::minutes(14), Duration::seconds(1)});
  REQUIRE(r.rows.size() == 5);
  CHECK(r.rows[0].metric == "sth");
  CHECK(std::abs(r.rows[0].value - 0.6666574) < 1e-7);
  // P = period: every sample sees PS_0 high and PS_1/3 low.
  CHECK(r.rows[1].value == 1.0);
  CHECK(r.rows[2].metric == "distortion");
  CHECK(r.rows[2].value == doctest::Approx(1.0 - r.rows[0].value));

  std::ostringstream out;
  bench::write_csv(out, r);
  CHECK(out.str().rfind("experiment,pair,metric,x,mean_s,std_s,value\nprecision,ps0_vs_ps13,sth,0,0,0,", 0) == 0);
}
