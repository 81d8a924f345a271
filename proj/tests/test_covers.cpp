#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <map>
#include <set>

#include "test_helpers.hpp"
#include "tropmod/covers.hpp"

using namespace tropmod;

namespace {

long long int_det(const Eigen::MatrixXi& m) {
  const int n = (int)m.rows();
  if (n == 1) return m(0, 0);
  long long d = 0;
  for (int r = 0; r < n; ++r) {
    if (m(r, 0) == 0) continue;
    Eigen::MatrixXi minor(n - 1, n - 1);
    for (int i = 0, ii = 0; i < n; ++i) {
      if (i == r) continue;
      for (int j = 1; j < n; ++j) minor(ii, j - 1) = m(i, j);
      ++ii;
    }
    d += ((r % 2) ? -1 : 1) * (long long)m(r, 0) * int_det(minor);
  }
  return d;
}

int pi_at(const CoverMap& c, int i, int k) {
  return c.assignments[i][k - (k > i ? 1 : 0)];
}

// Applies a ground-set bijection to a circuit bitmask.
ElementSet map_set(ElementSet s, const std::vector<int>& f) {
  ElementSet out = 0;
  for (size_t e = 0; e < f.size(); ++e)
    if ((s >> e) & 1) out |= ElementSet{1} << f[e];
  return out;
}

}  // namespace

TEST_CASE("FP fans") {
  FPFan f1 = build_fp(1);
  REQUIRE(f1.rays.size() == 2);
  CHECK(f1.rays[0](0) == 1);
  CHECK(f1.rays[1](0) == -1);
  CHECK(f1.cones.size() == 3);  // {}, {0}, {1}

  for (int n : {2, 3, 6}) {
    FPFan f = build_fp(n);
    CHECK(f.n == n);
    REQUIRE((int)f.rays.size() == n + 1);
    Eigen::VectorXi sum = Eigen::VectorXi::Zero(n);
    for (const auto& r : f.rays) sum += r;
    CHECK(sum.isZero());
    CHECK((int)f.cones.size() == (1 << (n + 1)) - 1);
    int maximal = 0;
    for (const auto& cone : f.cones) {
      CHECK((int)cone.size() <= n);
      CHECK(std::is_sorted(cone.begin(), cone.end()));
      if ((int)cone.size() == n) {
        ++maximal;
        // Maximal cones are simplicial and unimodular.
        Eigen::MatrixXi m(n, n);
        for (int k = 0; k < n; ++k) m.col(k) = f.rays[cone[k]];
        CHECK(std::abs(int_det(m)) == 1);
      }
    }
    CHECK(maximal == n + 1);
  }
  CHECK_THROWS(build_fp(0));
}

TEST_CASE("Fano cover of A_3") {
  CoverMap c = build_cover_a3();
  CHECK(c.fan.n == 6);
  CHECK(c.source.ground_size() == 7);
  REQUIRE(c.assignments.size() == 7);

  // Every deletion F_7 minus i is carried onto MK_4 by pi_i-hat.
  BinaryMatroid k = mk4();
  std::set<ElementSet> target_circuits(k.circuits().begin(), k.circuits().end());
  for (int i = 0; i < 7; ++i) {
    BinaryMatroid del = c.source.deleted(ElementSet{1} << i);
    std::set<ElementSet> mapped;
    for (ElementSet circ : del.circuits()) mapped.insert(map_set(circ, c.assignments[i]));
    CHECK(mapped == target_circuits);
  }

  // 21 pairs x 32 subsets, keyed uniquely, 32 per pair.
  REQUIRE(c.overlaps.size() == 672);
  std::set<std::tuple<int, int, ElementSet>> keys;
  std::map<std::pair<int, int>, int> per_pair;
  for (const OverlapWitness& w : c.overlaps) {
    CHECK(w.i < w.j);
    CHECK(((w.subset >> w.i) & 1) == 0);
    CHECK(((w.subset >> w.j) & 1) == 0);
    keys.insert({w.i, w.j, w.subset});
    ++per_pair[{w.i, w.j}];
    // Independent re-verification of the witness.
    CHECK(std::abs(int_det(w.x)) == 1);
    for (int e = 0; e < 7; ++e) {
      if (!((w.subset >> e) & 1)) continue;
      Eigen::VectorXi lhs = w.x * c.target_matrix.col(pi_at(c, w.i, e));
      Eigen::VectorXi rhs = c.target_matrix.col(pi_at(c, w.j, e));
      CHECK((lhs == rhs || lhs == (-rhs).eval()));
    }
  }
  CHECK(keys.size() == 672);
  CHECK(per_pair.size() == 21);
  for (const auto& [pair, count] : per_pair) CHECK(count == 32);

  // A 6-element cone maps onto the maximal Schottky cell C(MK_4).
  CHECK(is_isomorphic_matroid(c.source.deleted(ElementSet{1} << 0), k).has_value());
}

TEST_CASE("U24 cover of A_2") {
  CoverMap c = build_cover_a2();
  CHECK(c.fan.n == 3);
  CHECK(c.source.ground_size() == 4);
  REQUIRE(c.assignments.size() == 4);
  BinaryMatroid u23 = column_matroid_mod2(u23_matrix());
  for (int i = 0; i < 4; ++i)
    CHECK(is_isomorphic_matroid(c.source.deleted(ElementSet{1} << i), u23).has_value());
  REQUIRE(c.overlaps.size() == 24);
  for (const OverlapWitness& w : c.overlaps) {
    CHECK(std::abs(int_det(w.x)) == 1);
    for (int e = 0; e < 4; ++e) {
      if (!((w.subset >> e) & 1)) continue;
      Eigen::VectorXi lhs = w.x * c.target_matrix.col(pi_at(c, w.i, e));
      Eigen::VectorXi rhs = c.target_matrix.col(pi_at(c, w.j, e));
      CHECK((lhs == rhs || lhs == (-rhs).eval()));
    }
  }
  int maximal = 0;
  for (const auto& cone : c.fan.cones)
    if ((int)cone.size() == 3) ++maximal;
  CHECK(maximal == 4);
}

TEST_CASE("mod-p ray classes") {
  CHECK(modp_ray_classes(2, 3) == 4);   // rays of FP^3
  CHECK(modp_ray_classes(3, 2) == 7);   // rays of FP^6
  CHECK(modp_ray_classes(1, 2) == 1);
  for (int g = 1; g <= 3; ++g)
    for (int p : {2, 3, 5, 7}) {
      long long expect = 1;
      for (int i = 0; i < g; ++i) expect *= p;
      expect = (p == 2) ? expect - 1 : (expect - 1) / 2;
      CHECK(modp_ray_classes(g, p) == expect);
    }
  CHECK_THROWS(modp_ray_classes(0, 3));
  CHECK_THROWS(modp_ray_classes(2, 4));
  CHECK_THROWS(modp_ray_classes(2, 1));
}

TEST_CASE("cover json") {
  CoverMap c = build_cover_a2();
  std::string json = cover_to_json(c);
  CHECK(json.find("\"n\":3") != std::string::npos);
  CHECK(json.find("\"assignments\":[[") != std::string::npos);
  CHECK(json.find("\"overlaps\":[{") != std::string::npos);
  CHECK(json.find("\"cell_images\":[{") != std::string::npos);
}
