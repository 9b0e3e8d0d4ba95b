#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "sth/cluster.hpp"
#include "sth/error.hpp"

using namespace sth;

namespace {

DistanceMatrix three_points() {
  DistanceMatrix m({"a", "b", "c"});
  m.set(0, 1, 0.1);
  m.set(0, 2, 0.9);
  m.set(1, 2, 0.9);
  return m;
}

// Merge distances plus the leaf-id membership of every formed cluster.
std::multiset<std::pair<double, std::set<std::string>>> signature(const Dendrogram& d) {
  const std::size_t n = d.ids.size();
  std::vector<std::set<std::string>> members(2 * n);
  for (std::size_t i = 0; i < n; ++i) members[i] = {d.ids[i]};
  std::multiset<std::pair<double, std::set<std::string>>> out;
  for (std::size_t s = 0; s < d.merges.size(); ++s) {
    auto& m = members[n + s];
    m = members[d.merges[s].left];
    m.insert(members[d.merges[s].right].begin(), members[d.merges[s].right].end());
    out.emplace(d.merges[s].distance, m);
  }
  return out;
}

}  // namespace

TEST_CASE("two series merge once") {
  DistanceMatrix m({"x", "y"});
  m.set(0, 1, 0.42);
  const Dendrogram d = agglomerate(m, Linkage::Average);
  REQUIRE(d.merges.size() == 1);
  CHECK(d.merges[0].distance == 0.42);
  CHECK(d.merges[0].size == 2);
}

TEST_CASE("three points under complete linkage") {
  const Dendrogram d = agglomerate(three_points(), Linkage::Complete);
  REQUIRE(d.merges.size() == 2);
  CHECK(d.merges[0].left == 0);
  CHECK(d.merges[0].right == 1);
  CHECK(d.merges[0].distance == 0.1);
  CHECK(d.merges[1].left == 3);
  CHECK(d.merges[1].right == 2);
  CHECK(d.merges[1].distance == 0.9);
  CHECK(d.merges[1].size == 3);

  CHECK(cut(d, 2) == std::vector<std::size_t>{0, 0, 1});
  CHECK(cut(d, 3) == std::vector<std::size_t>{0, 1, 2});
  CHECK(cut(d, 1) == std::vector<std::size_t>{0, 0, 0});
  CHECK_THROWS_AS(cut(d, 0), Error);
  CHECK_THROWS_AS(cut(d, 4), Error);
}

TEST_CASE("average linkage uses size-weighted Lance-Williams updates") {
  // a-b merge first; then d({a,b},c) = (0.4 + 0.8) / 2 = 0.6 beats d(c,d)=0.7.
  DistanceMatrix m({"a", "b", "c", "d"});
  m.set(0, 1, 0.1);
  m.set(0, 2, 0.4);
  m.set(1, 2, 0.8);
  m.set(0, 3, 0.9);
  m.set(1, 3, 0.9);
  m.set(2, 3, 0.7);
  const Dendrogram avg = agglomerate(m, Linkage::Average);
  CHECK(avg.merges[1].distance == doctest::Approx(0.6));
  CHECK(avg.merges[1].size == 3);
  // ((a,b),c) vs d: (2*0.9 + 0.7) / 3.
  CHECK(avg.merges[2].distance == doctest::Approx((2 * 0.9 + 0.7) / 3));

  const Dendrogram comp = agglomerate(m, Linkage::Complete);
  CHECK(comp.merges[1].distance == 0.7);  // c-d at 0.7 beats max(0.4, 0.8)
}

TEST_CASE("ties go to the smallest pair") {
  DistanceMatrix m({"a", "b", "c"});
  m.set(0, 1, 0.5);
  m.set(0, 2, 0.5);
  m.set(1, 2, 0.5);
  const Dendrogram d = agglomerate(m, Linkage::Average);
  CHECK(d.merges[0].left == 0);
  CHECK(d.merges[0].right == 1);
}

TEST_CASE("permuted input yields an isomorphic dendrogram") {
  std::mt19937_64 rng(8);
  const std::size_t n = 12;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> full(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) full[i][j] = full[j][i] = u(rng);

  DistanceMatrix m(ids);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, full[i][j]);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> pids;
  for (auto k : perm) pids.push_back(ids[k]);
  DistanceMatrix pm(pids);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pm.set(i, j, full[perm[i]][perm[j]]);

  for (Linkage l : {Linkage::Average, Linkage::Complete}) {
    const Dendrogram a = agglomerate(m, l);
    const Dendrogram b = agglomerate(pm, l);
    CHECK(signature(a) == signature(b));
    for (std::size_t k = 1; k <= n; ++k) {
      const auto labels = cut(a, k);
      CHECK(std::set<std::size_t>(labels.begin(), labels.end()).size() == k);
    }
  }
}

TEST_CASE("CSV outputs") {
  const Dendrogram d = agglomerate(three_points(), Linkage::Complete);
  std::ostringstream labels, tree;
  write_labels_csv(labels, d, cut(d, 2));
  CHECK(labels.str() == "id,cluster\na,0\nb,0\nc,1\n");
  write_dendrogram_csv(tree, d);
  CHECK(tree.str() == "step,left,right,distance,size\n0,0,1,0.10000000000000001,2\n1,3,2,0.90000000000000002,3\n");
  CHECK(parse_linkage("complete") == Linkage::Complete);
  CHECK_THROWS_AS(parse_linkage("ward"), Error);
}
