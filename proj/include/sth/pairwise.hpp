#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sth/metrics.hpp"
#include "sth/series.hpp"

namespace sth {

/// Symmetric pairwise distances in condensed (upper-triangular) storage.
/// The diagonal is implicitly zero.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::vector<std::string> ids);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

  /// Slot of the (i, j) pair, i < j: i*N - i*(i+1)/2 + (j - i - 1).
  std::size_t index(std::size_t i, std::size_t j) const;

  double at(std::size_t i, std::size_t j) const;
  bool undefined(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, double value, bool undefined = false);

  std::vector<double>& values() noexcept { return values_; }
  const std::vector<double>& values() const noexcept { return values_; }
  const std::vector<std::uint8_t>& undefined_mask() const noexcept { return undefined_; }
  std::size_t undefined_count() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  friend DistanceMatrix pairwise_matrix(const std::vector<std::pair<std::string, SteTs>>&,
                                        const DistanceFunction&, unsigned);
  std::vector<std::string> ids_;
  std::vector<double> values_;
  std::vector<std::uint8_t> undefined_;
};

/// Computes every i < j distance with `workers` threads (0 = hardware
/// concurrency). Each pair is written to its own slot, so the result does
/// not depend on the worker count.
DistanceMatrix pairwise_matrix(const std::vector<std::pair<std::string, SteTs>>& collection,
                               const DistanceFunction& metric, unsigned workers = 1);

/// Full symmetric CSV: header `id,<id_1>,...,<id_N>`, then one row per id.
/// Values use 17 significant digits; undefined entries get a `?` suffix.
void write_matrix_csv(std::ostream& out, const DistanceMatrix& m);
DistanceMatrix read_matrix_csv(std::istream& in);

}  // namespace sth
