#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "sth/cluster.hpp"
#include "sth/event_file.hpp"
#include "sth/pairwise.hpp"

namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("sth_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

int run(const std::string& args) {
  const std::string cmd = std::string(STH_CLI_PATH) + " " + args + " > " + (scratch() / "stdout").string() +
                          " 2> " + (scratch() / "stderr").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string path(const char* name) { return (scratch() / name).string(); }

}  // namespace

TEST_CASE("gen, dist and cluster chain") {
  REQUIRE(run("gen --kind random --n 200 --span-days 1 --seed 5 --count 4 --out " + path("r.csv")) == 0);
  REQUIRE(run("gen --kind random --n 200 --span-days 1 --seed 5 --count 4 --out " + path("r2.csv")) == 0);
  CHECK(slurp(path("r.csv")) == slurp(path("r2.csv")));

  const auto events = sth::ingest_file(path("r.csv"), sth::TimeFormat::Nanoseconds, false);
  CHECK(events.series.size() == 4);
  CHECK(events.series[0].first == "s0");
  CHECK(events.series[0].second.event_count() == 200);

  REQUIRE(run("dist --input " + path("r.csv") + " --metric sth --interest 1 --other 0 --workers 2 --out " +
              path("m.csv")) == 0);
  std::ifstream min(path("m.csv"));
  const sth::DistanceMatrix m = sth::read_matrix_csv(min);
  CHECK(m.size() == 4);

  REQUIRE(run("dist --input " + path("r.csv") + " --metric thamming --out " + path("h.csv")) == 0);
  REQUIRE(run("cluster --matrix " + path("m.csv") + " --k 2 --linkage complete --out " + path("l.csv") +
              " --dendrogram " + path("d.csv")) == 0);
  const std::string labels = slurp(path("l.csv"));
  CHECK(labels.rfind("id,cluster\ns0,0\n", 0) == 0);
  CHECK(slurp(path("d.csv")).rfind("step,left,right,distance,size\n", 0) == 0);
}

TEST_CASE("periodic generator with fractional lag") {
  REQUIRE(run("gen --kind periodic --period 14 --duty 0.6 --lag-frac 1/3 --span-days 30 --out " +
              path("p.csv")) == 0);
  const auto c = sth::ingest_file(path("p.csv"), sth::TimeFormat::Nanoseconds, false);
  CHECK(c.series.size() == 1);
  CHECK(c.series[0].second.duration() == sth::Duration::days(30));

  REQUIRE(run("gen --kind ticks --span-days 1 --time-format rfc3339 --out " + path("t.csv")) == 0);
  const auto t = sth::ingest_file(path("t.csv"), sth::TimeFormat::Rfc3339, false);
  CHECK(t.series[0].second.event_count() == 288);
}

TEST_CASE("partition flags") {
  std::ofstream(path("w.csv")) << "series_id,timestamp,state\n"
                                  "a,0,Rain\na,40,Snow\na,70,Normal\na,100,$end\n"
                                  "b,0,Normal\nb,50,Rain\nb,100,$end\n";
  // Normal left unassigned.
  CHECK(run("dist --input " + path("w.csv") + " --metric sth --interest Rain,Snow --out " + path("x.csv")) == 1);
  CHECK(slurp(scratch() / "stderr").rfind("error: ", 0) == 0);
  CHECK(run("dist --input " + path("w.csv") + " --metric sth --interest Rain,Snow --other-rest --out " +
            path("x.csv")) == 0);
  CHECK(run("dist --input " + path("w.csv") + " --metric sth --interest Rain --excluded Snow --other Normal --out " +
            path("x.csv")) == 0);
  // Jaccard needs --one, resampled metrics need --period.
  CHECK(run("dist --input " + path("w.csv") + " --metric tjaccard --out " + path("x.csv")) == 1);
  CHECK(run("dist --input " + path("w.csv") + " --metric rhamming --out " + path("x.csv")) == 1);
  CHECK(run("dist --input " + path("w.csv") + " --metric rhamming --period 10 --out " + path("x.csv")) == 0);
  CHECK(run("dist --input " + path("w.csv") + " --metric tjaccard --one Rain --out " + path("x.csv")) == 0);
}

TEST_CASE("error exits") {
  CHECK(run("dist --input " + path("missing.csv") + " --metric sth --out " + path("x.csv")) == 1);
  std::ofstream(path("bad.csv")) << "series_id,timestamp,state\na,0,X\na,5,Y\n";
  CHECK(run("dist --input " + path("bad.csv") + " --metric thamming --out " + path("x.csv")) == 1);
  CHECK(slurp(scratch() / "stderr").find("MissingEndRow") != std::string::npos);
  CHECK(run("gen --kind ticks --spacing 0.001 --span-days 1 --out " + path("x.csv")) == 1);
  CHECK(run("cluster --matrix " + path("m.csv") + " --k 9 --out " + path("x.csv")) == 1);
  CHECK(run("nonsense") != 0);
}
