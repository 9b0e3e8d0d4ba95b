// Command-line front end: generate series, compute distance matrices, run
// the benchmark experiments and cluster precomputed matrices.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sth/bench.hpp"
#include "sth/cluster.hpp"
#include "sth/error.hpp"
#include "sth/event_file.hpp"
#include "sth/metrics.hpp"
#include "sth/pairwise.hpp"
#include "sth/synth.hpp"
#include "sth/units.hpp"

namespace {

using sth::Error;
using sth::ErrorCode;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  return out;
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
  std::string kind;
  std::string span_days = "30";
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::string period_min = "14";
  std::string duty = "0.6";
  std::string lag_frac = "0";
  std::string spacing_min = "5";
  std::size_t count = 1;
  std::int64_t start_ns = 0;
  std::string time_format = "ns";
  std::string out;
};

int run_gen(const GenOptions& o) {
  const sth::Duration span_len = sth::parse_fraction(o.span_days).of(sth::Duration::days(1));
  const sth::Timestamp start{o.start_ns};
  sth::GenSpec spec;
  spec.span = {start, start + span_len};
  if (o.kind == "random") {
    spec.kind = sth::RandomSpec{o.n};
  } else if (o.kind == "ticks") {
    sth::TicksSpec t;
    t.params.spacing = sth::parse_fraction(o.spacing_min).of(sth::Duration::minutes(1));
    spec.kind = t;
  } else {
    sth::PeriodicSpec p;
    p.period = sth::parse_fraction(o.period_min).of(sth::Duration::minutes(1));
    p.duty = sth::parse_fraction(o.duty);
    p.lag_fraction = sth::parse_fraction(o.lag_frac);
    spec.kind = p;
  }

  std::vector<std::pair<std::string, sth::SteTs>> series;
  for (std::size_t k = 0; k < o.count; ++k) {
    spec.seed = o.seed + k;
    series.emplace_back("s" + std::to_string(k), sth::generate(spec));
  }
  auto out = open_out(o.out);
  sth::write_event_file(out, series, sth::parse_time_format(o.time_format));
  return 0;
}

// ---------------------------------------------------------------------------
// dist

struct DistOptions {
  std::string input;
  std::string time_format = "ns";
  bool simplify = false;
  std::string metric;
  std::vector<std::string> interest;
  std::vector<std::string> other;
  std::vector<std::string> excluded;
  bool other_rest = false;
  std::optional<double> fallback;
  std::optional<std::string> one;
  std::optional<std::string> period;
  unsigned workers = 1;
  std::string out;
};

std::vector<sth::StateId> to_ids(const sth::StateAlphabet& alphabet,
                                 const std::vector<std::string>& labels, const char* flag) {
  std::vector<sth::StateId> ids;
  for (const auto& label : labels) {
    if (!alphabet.contains(label)) {
      throw Error(ErrorCode::InvalidPartition,
                  std::string(flag) + ": state '" + label + "' does not occur in the input");
    }
    ids.push_back(alphabet.id_of(label));
  }
  return ids;
}

sth::StatePartition build_partition(const DistOptions& o, const sth::StateAlphabet& alphabet) {
  const bool any = !o.interest.empty() || !o.other.empty() || !o.excluded.empty() || o.other_rest;
  const double fallback = o.fallback.value_or(0.0);
  if (!any) {
    std::vector<sth::StateId> all(alphabet.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<sth::StateId>(k);
    return sth::StatePartition(alphabet.size(), all, {}, {}, fallback);
  }
  const auto interest = to_ids(alphabet, o.interest, "--interest");
  auto other = to_ids(alphabet, o.other, "--other");
  const auto excluded = to_ids(alphabet, o.excluded, "--excluded");

  std::set<sth::StateId> listed(interest.begin(), interest.end());
  listed.insert(other.begin(), other.end());
  listed.insert(excluded.begin(), excluded.end());
  std::vector<std::string> missing;
  for (std::size_t k = 0; k < alphabet.size(); ++k) {
    const auto id = static_cast<sth::StateId>(k);
    if (listed.contains(id)) continue;
    if (o.other_rest) {
      other.push_back(id);
    } else {
      missing.push_back(alphabet.label(id));
    }
  }
  if (!missing.empty()) {
    std::string names;
    for (const auto& m : missing) names += (names.empty() ? "" : ",") + m;
    throw Error(ErrorCode::InvalidPartition,
                "states not assigned to --interest/--other/--excluded: " + names +
                    " (use --other-rest to put them in S_O)");
  }
  return sth::StatePartition(alphabet.size(), interest, other, excluded, fallback);
}

int run_dist(const DistOptions& o) {
  const sth::MetricKind kind = sth::parse_metric_kind(o.metric);
  const bool is_sth = kind == sth::MetricKind::Sth;
  const bool needs_one =
      kind == sth::MetricKind::TemporalJaccard || kind == sth::MetricKind::ResampledJaccard;
  const bool needs_period =
      kind == sth::MetricKind::ResampledHamming || kind == sth::MetricKind::ResampledJaccard;
  const bool partition_flags = !o.interest.empty() || !o.other.empty() || !o.excluded.empty() ||
                               o.other_rest || o.fallback.has_value();

  if (!is_sth && partition_flags) {
    throw Error(ErrorCode::MissingParams, "partition flags only apply to --metric sth");
  }
  if (needs_one != o.one.has_value()) {
    throw Error(ErrorCode::MissingParams, needs_one ? "--one is required for Jaccard metrics"
                                                    : "--one only applies to Jaccard metrics");
  }
  if (needs_period != o.period.has_value()) {
    throw Error(ErrorCode::MissingParams, needs_period
                                              ? "--period is required for resampled metrics"
                                              : "--period only applies to resampled metrics");
  }

  const sth::SeriesCollection input =
      sth::ingest_file(o.input, sth::parse_time_format(o.time_format), o.simplify);
  const sth::StateAlphabet& alphabet = *input.alphabet;

  sth::MetricParams params;
  if (is_sth) params.partition = build_partition(o, alphabet);
  if (o.one) {
    if (!alphabet.contains(*o.one)) {
      throw Error(ErrorCode::UnknownStateId, "--one: state '" + *o.one + "' does not occur in the input");
    }
    params.one = alphabet.id_of(*o.one);
  }
  if (o.period) params.resample = sth::ResampleConfig{sth::parse_duration(*o.period), std::nullopt};

  const auto metric = sth::make_metric(kind, params);
  const sth::DistanceMatrix m = sth::pairwise_matrix(input.series, metric, o.workers);
  auto out = open_out(o.out);
  sth::write_matrix_csv(out, m);
  if (const std::size_t undef = m.undefined_count(); undef > 0) {
    std::cerr << "warning: " << undef << " pair(s) undefined, fallback distance used\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
  std::string experiment;
  std::vector<std::string> grid;
  int runs = 30;
  std::uint64_t seed = 0;
  std::string period = "5min";
  std::string out;
};

int run_bench(const BenchOptions& o) {
  sth::bench::Result result;
  if (o.experiment == "events") {
    std::vector<std::size_t> grid;
    for (const auto& g : o.grid) grid.push_back(std::stoull(g));
    if (grid.empty()) grid = {1000, 2000, 5000, 10000, 20000, 50000, 100000};
    result = sth::bench::events(grid, o.runs, sth::parse_duration(o.period), o.seed);
  } else {
    std::vector<sth::Duration> grid;
    for (const auto& g : o.grid) grid.push_back(sth::parse_duration(g));
    if (grid.empty()) {
      for (const char* g : {"28min", "14min", "7min", "14/3min", "5min", "2min", "1min", "30s", "10s",
                            "1s", "100ms"}) {
        grid.push_back(sth::parse_duration(g));
      }
    }
    result = o.experiment == "period" ? sth::bench::period(grid, o.runs) : sth::bench::precision(grid);
  }
  auto out = open_out(o.out);
  sth::bench::write_csv(out, result);
  return 0;
}

// ---------------------------------------------------------------------------
// cluster

struct ClusterOptions {
  std::string matrix;
  std::string linkage = "average";
  std::size_t k = 2;
  std::string out;
  std::string dendrogram;
};

int run_cluster(const ClusterOptions& o) {
  std::ifstream in(o.matrix);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + o.matrix + "'");
  const sth::DistanceMatrix m = sth::read_matrix_csv(in);
  const sth::Dendrogram d = sth::agglomerate(m, sth::parse_linkage(o.linkage));
  if (d.undefined_pairs > 0) {
    std::cerr << "warning: " << d.undefined_pairs << " undefined pair(s) clustered at their fallback distance\n";
  }
  const auto labels = sth::cut(d, o.k);
  auto out = open_out(o.out);
  sth::write_labels_csv(out, d, labels);
  if (!o.dendrogram.empty()) {
    auto dout = open_out(o.dendrogram);
    sth::write_dendrogram_csv(dout, d);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Selective temporal Hamming distances for state transition event timeseries"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Generate synthetic series into an event file");
  g->add_option("--kind", gen.kind, "Generator")->required()->check(CLI::IsMember({"random", "ticks", "periodic"}));
  g->add_option("--span-days", gen.span_days, "Span length in days (fraction allowed)");
  g->add_option("--seed", gen.seed, "Seed (series k uses seed + k)");
  g->add_option("--n", gen.n, "Number of events (random)");
  g->add_option("--period", gen.period_min, "Period in minutes (periodic)");
  g->add_option("--duty", gen.duty, "Duty cycle, decimal or p/q (periodic)");
  g->add_option("--lag-frac", gen.lag_frac, "Lag as a fraction of the period, decimal or p/q (periodic)");
  g->add_option("--spacing", gen.spacing_min, "Event spacing in minutes (ticks)");
  g->add_option("--count", gen.count, "Number of series to write")->check(CLI::PositiveNumber);
  g->add_option("--start", gen.start_ns, "Start time, ns since epoch");
  g->add_option("--time-format", gen.time_format, "ns or rfc3339")->check(CLI::IsMember({"ns", "rfc3339"}));
  g->add_option("--out", gen.out, "Output event file")->required();

  DistOptions dist;
  auto* d = app.add_subcommand("dist", "Pairwise distance matrix of an event file");
  d->add_option("--input", dist.input, "Event file")->required();
  d->add_option("--time-format", dist.time_format, "ns or rfc3339")->check(CLI::IsMember({"ns", "rfc3339"}));
  d->add_flag("--simplify", dist.simplify, "Merge repeated consecutive states instead of rejecting them");
  d->add_option("--metric", dist.metric, "Metric")
      ->required()
      ->check(CLI::IsMember({"sth", "thamming", "tjaccard", "rhamming", "rjaccard"}));
  d->add_option("--interest", dist.interest, "States of interest")->delimiter(',');
  d->add_option("--other", dist.other, "Other states")->delimiter(',');
  d->add_option("--excluded", dist.excluded, "Excluded states")->delimiter(',');
  d->add_flag("--other-rest", dist.other_rest, "Assign every unlisted state to the other set");
  d->add_option("--fallback", dist.fallback, "Similarity used for undefined pairs")->check(CLI::Range(0.0, 1.0));
  d->add_option("--one", dist.one, "State treated as 1 by Jaccard metrics");
  d->add_option("--period", dist.period, "Sampling period for resampled metrics, e.g. 5min");
  d->add_option("--workers", dist.workers, "Worker threads (0 = all cores)");
  d->add_option("--out", dist.out, "Output matrix CSV")->required();

  BenchOptions bench;
  auto* b = app.add_subcommand("bench", "Run a timing or precision experiment");
  b->add_option("--experiment", bench.experiment, "Experiment")
      ->required()
      ->check(CLI::IsMember({"events", "period", "precision"}));
  b->add_option("--grid", bench.grid, "Event counts (events) or periods (period, precision)")->delimiter(',');
  b->add_option("--runs", bench.runs, "Timed runs per measurement")->check(CLI::PositiveNumber);
  b->add_option("--seed", bench.seed, "Seed for generated series");
  b->add_option("--period", bench.period, "Sampling period for the events experiment");
  b->add_option("--out", bench.out, "Output CSV")->required();

  ClusterOptions cluster;
  auto* c = app.add_subcommand("cluster", "Agglomerative clustering of a distance matrix");
  c->add_option("--matrix", cluster.matrix, "Matrix CSV written by dist")->required();
  c->add_option("--linkage", cluster.linkage, "average or complete")->check(CLI::IsMember({"average", "complete"}));
  c->add_option("--k", cluster.k, "Number of clusters")->required();
  c->add_option("--out", cluster.out, "Output labels CSV")->required();
  c->add_option("--dendrogram", cluster.dendrogram, "Optional dendrogram CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (g->parsed()) return run_gen(gen);
    if (d->parsed()) return run_dist(dist);
    if (b->parsed()) return run_bench(bench);
    if (c->parsed()) return run_cluster(cluster);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
