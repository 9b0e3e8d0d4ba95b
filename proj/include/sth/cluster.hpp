#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sth/pairwise.hpp"

namespace sth {

enum class Linkage { Average, Complete };

Linkage parse_linkage(std::string_view name);

/// One agglomeration step. Leaves are numbered 0..N-1 in matrix id order;
/// the cluster formed at step s gets id N + s.
struct Merge {
  std::size_t left;
  std::size_t right;
  double distance;
  std::size_t size;
};

struct Dendrogram {
  std::vector<std::string> ids;
  std::vector<Merge> merges;
  std::size_t undefined_pairs = 0;  // matrix entries that carried the fallback
};

/// Naive O(N^3) agglomerative clustering with Lance-Williams updates. Ties
/// go to the lexicographically smallest (slot_i, slot_j) pair, where a merged
/// cluster keeps the smaller slot.
Dendrogram agglomerate(const DistanceMatrix& m, Linkage linkage);

/// Flat labels after the first N - k merges, numbered 0.. by first appearance
/// in id order. Throws InvalidK unless 1 <= k <= N.
std::vector<std::size_t> cut(const Dendrogram& d, std::size_t k);

void write_labels_csv(std::ostream& out, const Dendrogram& d,
                      const std::vector<std::size_t>& labels);
void write_dendrogram_csv(std::ostream& out, const Dendrogram& d);

}  // namespace sth
