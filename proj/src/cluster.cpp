#include "sth/cluster.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "sth/error.hpp"

namespace sth {

Linkage parse_linkage(std::string_view name) {
  if (name == "average") return Linkage::Average;
  if (name == "complete") return Linkage::Complete;
  throw Error(ErrorCode::ParseError, "unknown linkage '" + std::string(name) + "'");
}

Dendrogram agglomerate(const DistanceMatrix& m, Linkage linkage) {
  const std::size_t n = m.size();
  if (n < 2) throw Error(ErrorCode::TooFewSeries, "need at least 2 series to cluster");

  // Dense working copy, slot-indexed.
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) d[i * n + j] = d[j * n + i] = m.at(i, j);
  }
  std::vector<bool> active(n, true);
  std::vector<std::size_t> cluster_id(n);
  std::vector<std::size_t> size(n, 1);
  std::iota(cluster_id.begin(), cluster_id.end(), 0);

  Dendrogram out;
  out.ids = m.ids();
  out.undefined_pairs = m.undefined_count();
  out.merges.reserve(n - 1);

  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t bi = 0;
    std::size_t bj = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!active[j]) continue;
        // Strict comparison keeps the first (smallest) pair on ties.
        if (d[i * n + j] < best) {
          best = d[i * n + j];
          bi = i;
          bj = j;
        }
      }
    }

    const std::size_t ni = size[bi];
    const std::size_t nj = size[bj];
    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k] || k == bi || k == bj) continue;
      const double dik = d[bi * n + k];
      const double djk = d[bj * n + k];
      const double merged = linkage == Linkage::Complete
                                ? std::max(dik, djk)
                                : (static_cast<double>(ni) * dik + static_cast<double>(nj) * djk) /
                                      static_cast<double>(ni + nj);
      d[bi * n + k] = d[k * n + bi] = merged;
    }

    out.merges.push_back({cluster_id[bi], cluster_id[bj], best, ni + nj});
    active[bj] = false;
    size[bi] = ni + nj;
    cluster_id[bi] = n + step;
  }
  return out;
}

std::vector<std::size_t> cut(const Dendrogram& d, std::size_t k) {
  const std::size_t n = d.ids.size();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::InvalidK, "k=" + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  }
  // Union-find over leaves plus internal nodes.
  std::vector<std::size_t> parent(2 * n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t s = 0; s < n - k; ++s) {
    const Merge& mg = d.merges[s];
    parent[find(mg.left)] = n + s;
    parent[find(mg.right)] = n + s;
  }

  std::vector<std::size_t> labels(n);
  std::vector<std::size_t> label_of_root(2 * n, std::numeric_limits<std::size_t>::max());
  std::size_t next = 0;
  for (std::size_t leaf = 0; leaf < n; ++leaf) {
    const std::size_t root = find(leaf);
    if (label_of_root[root] == std::numeric_limits<std::size_t>::max()) label_of_root[root] = next++;
    labels[leaf] = label_of_root[root];
  }
  return labels;
}

void write_labels_csv(std::ostream& out, const Dendrogram& d,
                      const std::vector<std::size_t>& labels) {
  out << "id,cluster\n";
  for (std::size_t i = 0; i < d.ids.size(); ++i) out << d.ids[i] << ',' << labels.at(i) << '\n';
}

void write_dendrogram_csv(std::ostream& out, const Dendrogram& d) {
  out << "step,left,right,distance,size\n";
  char buf[40];
  for (std::size_t s = 0; s < d.merges.size(); ++s) {
    const Merge& mg = d.merges[s];
    std::snprintf(buf, sizeof buf, "%.17g", mg.distance);
    out << s << ',' << mg.left << ',' << mg.right << ',' << buf << ',' << mg.size << '\n';
  }
}

}  // namespace sth
