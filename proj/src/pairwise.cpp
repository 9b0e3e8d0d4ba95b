#include "sth/pairwise.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>

#include "sth/error.hpp"
#include "sth/sweep.hpp"

namespace sth {

DistanceMatrix::DistanceMatrix(std::vector<std::string> ids) : ids_(std::move(ids)) {
  const std::size_t n = ids_.size();
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  values_.assign(pairs, 0.0);
  undefined_.assign(pairs, 0);
}

std::size_t DistanceMatrix::index(std::size_t i, std::size_t j) const {
  const std::size_t n = ids_.size();
  if (i >= j || j >= n) {
    throw std::out_of_range("condensed index needs i < j < N");
  }
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

double DistanceMatrix::at(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  if (i > j) std::swap(i, j);
  return values_[index(i, j)];
}

bool DistanceMatrix::undefined(std::size_t i, std::size_t j) const {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  return undefined_[index(i, j)] != 0;
}

void DistanceMatrix::set(std::size_t i, std::size_t j, double value, bool undefined) {
  if (i > j) std::swap(i, j);
  const std::size_t k = index(i, j);
  values_[k] = value;
  undefined_[k] = undefined ? 1 : 0;
}

std::size_t DistanceMatrix::undefined_count() const {
  return static_cast<std::size_t>(std::count(undefined_.begin(), undefined_.end(), 1));
}

DistanceMatrix pairwise_matrix(const std::vector<std::pair<std::string, SteTs>>& collection,
                               const DistanceFunction& metric, unsigned workers) {
  const std::size_t n = collection.size();
  if (n < 2) throw Error(ErrorCode::TooFewSeries, "need at least 2 series, got " + std::to_string(n));

  std::vector<std::string> ids;
  ids.reserve(n);
  std::unordered_set<std::string> seen;
  for (const auto& [id, series] : collection) {
    if (!seen.insert(id).second) throw Error(ErrorCode::DuplicateId, "series id '" + id + "'");
    ids.push_back(id);
    check_comparable(collection.front().second, series);
  }

  DistanceMatrix m(std::move(ids));
  const std::size_t pairs = m.values_.size();

  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, pairs));

  // Pairs are handed out in fixed-size chunks of the condensed index; each
  // slot is written by exactly one thread.
  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> next_chunk{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  const auto run = [&] {
    try {
      while (true) {
        const std::size_t lo = next_chunk.fetch_add(kChunk, std::memory_order_relaxed);
        if (lo >= pairs) return;
        const std::size_t hi = std::min(pairs, lo + kChunk);
        // Locate (i, j) for slot lo, then walk forward.
        std::size_t i = 0;
        std::size_t row_start = 0;
        while (row_start + (n - i - 1) <= lo) {
          row_start += n - i - 1;
          ++i;
        }
        std::size_t j = i + 1 + (lo - row_start);
        for (std::size_t k = lo; k < hi; ++k) {
          const MetricValue v = metric(collection[i].second, collection[j].second);
          m.values_[k] = v.distance();
          m.undefined_[k] = v.defined ? 0 : 1;
          if (++j == n) {
            ++i;
            j = i + 1;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next_chunk.store(pairs);
    }
  };

  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return m;
}

void write_matrix_csv(std::ostream& out, const DistanceMatrix& m) {
  out << "id";
  for (const auto& id : m.ids()) out << ',' << id;
  out << '\n';
  char buf[40];
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << m.ids()[i];
    for (std::size_t j = 0; j < m.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m.at(i, j));
      out << ',' << buf;
      if (m.undefined(i, j)) out << '?';
    }
    out << '\n';
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

DistanceMatrix read_matrix_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "line 1: empty matrix file");
  strip_cr(line);
  auto header = split_csv_line(line);
  if (header.empty() || header[0] != "id") {
    throw Error(ErrorCode::ParseError, "line 1: header must start with 'id'");
  }
  std::vector<std::string> ids(header.begin() + 1, header.end());
  const std::size_t n = ids.size();
  if (n < 2) throw Error(ErrorCode::TooFewSeries, "matrix has " + std::to_string(n) + " ids");
  DistanceMatrix m(ids);

  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "line " + std::to_string(i + 2);
    if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, where + ": missing row");
    strip_cr(line);
    auto fields = split_csv_line(line);
    if (fields.size() != n + 1) {
      throw Error(ErrorCode::ParseError, where + ": expected " + std::to_string(n + 1) + " fields");
    }
    if (fields[0] != ids[i]) {
      throw Error(ErrorCode::ParseError, where + ": row id '" + fields[0] + "' != '" + ids[i] + "'");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      std::string cell = fields[j + 1];
      bool undefined = false;
      if (!cell.empty() && cell.back() == '?') {
        undefined = true;
        cell.pop_back();
      }
      double v = 0.0;
      try {
        std::size_t used = 0;
        v = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, where + ": bad value '" + fields[j + 1] + "'");
      }
      m.set(i, j, v, undefined);
    }
  }
  return m;
}

}  // namespace sth
