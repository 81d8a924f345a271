#ifndef TROPMOD_VERIFY_SUITE_HPP
#define TROPMOD_VERIFY_SUITE_HPP

// Acceptance checks shared by `tropmod verify-all` and the acceptance
// test binary. Every check is deterministic given (genus_max, seed).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tropmod/covers.hpp"
#include "tropmod/moduli_poset.hpp"
#include "tropmod/quadform.hpp"
#include "tropmod/torelli.hpp"
#include "tropmod/trivalent.hpp"

namespace tropmod::verify {

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

namespace detail {

struct Reporter {
  Check check;
  explicit Reporter(std::string name) { check.name = std::move(name); }
  void expect(bool cond, const std::string& what) {
    if (cond || !check.ok) return;
    check.ok = false;
    check.detail = what;
  }
};

inline long long int_det(const Eigen::MatrixXi& m) {
  const int n = static_cast<int>(m.rows());
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
    d += ((r % 2) ? -1 : 1) * static_cast<long long>(m(r, 0)) * int_det(minor);
  }
  return d;
}

inline QuadForm qf2(Rational a, Rational b, Rational c) {
  QuadForm q(2, 2);
  q << a, b, b, c;
  return q;
}

inline std::uint64_t count_circuit_permutations(const BinaryMatroid& m) {
  const int n = m.ground_size();
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::uint64_t autos = 0;
  do {
    bool ok = true;
    for (ElementSet c : m.circuits()) {
      ElementSet image = 0;
      for (int i = 0; i < n; ++i)
        if (c & (ElementSet{1} << i)) image |= ElementSet{1} << pi[i];
      if (!m.is_circuit(image)) { ok = false; break; }
    }
    autos += ok;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return autos;
}

}  // namespace detail

inline std::vector<Check> run_all(int genus_max, std::uint64_t seed) {
  using detail::Reporter;
  std::vector<Check> out;
  std::map<int, CellPoset> posets;
  for (int g = 2; g <= std::min(genus_max, 5); ++g) posets[g] = build_moduli_poset(g);

  {  // 1. trivalent counts
    Reporter r("trivalent-counts");
    try {
      const std::map<int, int> expected{{2, 2}, {3, 5}, {4, 17}, {5, 71}, {6, 388}};
      for (int g = 2; g <= std::min(genus_max, 6); ++g) {
        int got = static_cast<int>(enumerate_trivalent(g).size());
        std::ostringstream os;
        os << "g=" << g << ": got " << got << ", want " << expected.at(g);
        r.expect(got == expected.at(g), os.str());
      }
    } catch (const std::exception& e) {
      r.expect(false, e.what());
    }
    out.push_back(r.check);
  }

  {  // 2. moduli posets
    Reporter r("moduli-posets");
    try {
      const std::map<int, int> totals{{2, 7}, {3, 42}, {4, 379}, {5, 4555}};
      const std::map<int, std::vector<int>> fvecs{
          {3, {1, 2, 5, 9, 12, 8, 5}},
          {4, {1, 3, 7, 21, 43, 75, 89, 81, 42, 17}},
          {5, {1, 3, 11, 34, 100, 239, 492, 784, 1002, 926, 632, 260, 71}}};
      for (auto& [g, p] : posets) {
        std::ostringstream os;
        os << "g=" << g << ": " << p.cells.size() << " cells, want " << totals.at(g);
        r.expect(static_cast<int>(p.cells.size()) == totals.at(g), os.str());
        if (fvecs.count(g))
          r.expect(f_vector(p) == fvecs.at(g), "f-vector mismatch at g=" + std::to_string(g));
      }
    } catch (const std::exception& e) {
      r.expect(false, e.what());
    }
    out.push_back(r.check);
  }

  std::map<int, SchottkyPoset> schottky;
  {  // 3. schottky posets
    Reporter r("schottky-posets");
    try {
      const std::map<int, int> totals{{2, 4}, {3, 9}, {4, 25}, {5, 92}};
      const std::map<int, size_t> max_counts{{2, 1}, {3, 1}, {4, 2}, {5, 4}};
      const std::map<int, std::vector<int>> fvecs{
          {2, {1, 1, 1, 1}},
          {3, {1, 1, 1, 2, 2, 1, 1}},
          {4, {1, 1, 1, 2, 3, 4, 5, 4, 2, 2}},
          {5, {1, 1, 1, 2, 3, 5, 9, 12, 15, 17, 15, 7, 4}}};
      for (int g = 2; g <= std::min(genus_max, 5); ++g) {
        schottky[g] = build_schottky_poset(g);
        const SchottkyPoset& p = schottky[g];
        std::ostringstream os;
        os << "g=" << g << ": " << p.cells.size() << " cells, want " << totals.at(g);
        r.expect(static_cast<int>(p.cells.size()) == totals.at(g), os.str());
        r.expect(schottky_f_vector(p) == fvecs.at(g),
                 "f-vector mismatch at g=" + std::to_string(g));
        r.expect(schottky_maximal_cells(p).size() == max_counts.at(g),
                 "maximal-cell count mismatch at g=" + std::to_string(g));
      }
    } catch (const std::exception& e) {
      r.expect(false, e.what());
    }
    out.push_back(r.check);
  }

  if (genus_max >= 3) {  // 4. figure-4 cross-check
    Reporter r("figure4-crosscheck");
    try {
      auto bouquet = [](int loops, int weight) {
        std::vector<Edge> edges;
        for (int i = 0; i < loops; ++i) edges.emplace_back(0, 0);
        return WeightedGraph({weight}, std::move(edges));
      };
      std::vector<WeightedGraph> figures = {
          bouquet(0, 3),
          bouquet(1, 2),
          bouquet(2, 1),
          bouquet(3, 0),
          WeightedGraph({1, 0}, {{0, 1}, {0, 1}, {0, 1}}),
          WeightedGraph({0, 0}, {{0, 0}, {0, 1}, {0, 1}, {0, 1}}),
          WeightedGraph({0, 0}, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}),
          WeightedGraph({0, 0, 0}, {{0, 1}, {0, 1}, {0, 2}, {0, 2}, {1, 2}}),
          WeightedGraph({0, 0, 0, 0},
                        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
      };
      const SchottkyPoset& a3 = schottky.count(3) ? schottky.at(3) : (schottky[3] = build_schottky_poset(3));
      r.expect(a3.cells.size() == figures.size(), "cell count != 9");
      std::vector<char> hit(a3.cells.size(), 0);
      for (size_t f = 0; f < figures.size(); ++f) {
        BinaryMatroid image = torelli_cell_image(figures[f]);
        int matches = 0;
        for (const SchottkyCell& cell : a3.cells)
          if (cell.rank == image.ground_size() &&
              is_isomorphic_matroid(cell.matroid, image)) {
            hit[cell.id] = 1;
            ++matches;
          }
        r.expect(matches == 1, "figure " + std::to_string(f) + " matches " +
                                   std::to_string(matches) + " cells");
      }
      for (size_t i = 0; i < hit.size(); ++i)
        r.expect(hit[i] == 1, "cell " + std::to_string(i) + " not covered");
    } catch (const std::exception& e) {
      r.expect(false, e.what());
    }
    out.push_back(r.check);
  }

  {  // 5. torelli identity
    Reporter r("torelli-identity");
    try {
      QuadForm theta_j = tropical_jacobian(
          {WeightedGraph({0, 0}, {{0, 1}, {0, 1}, {0, 1}}), {1, 1, 1}});
      r.expect(theta_j == detail::qf2(2, -1, 2), "theta Jacobian mismatch");
      std::mt19937 rng(static_cast<std::uint32_t>(seed));
      const int gmax = std::min(genus_max, 4);
      for (int trial = 0; trial < 200; ++trial) {
        int g = 2 + static_cast<int>(rng() % (gmax - 1));
        const CellPoset& p = posets.at(g);
        const Cell& cell = p.cells[rng() % p.cells.size()];
        if (cell.graph.num_edges() == 0) continue;
        MetricCurve c{cell.graph, {}};
        for (int e = 0; e < cell.graph.num_edges(); ++e)
          c.lengths.push_back(Rational(1 + static_cast<int>(rng() % 9),
                                       1 + static_cast<int>(rng() % 4)));
        const int h = genus(cell.graph) - cell.graph.total_weight();
        if (h == 0) continue;
        auto coeffs = jacobian_in_cographic_cone(c);
        TUMatrix b = tu_representation_cographic(cell.graph);
        std::vector<int> live;
        for (int e = 0; e < b.cols(); ++e)
          if (!b.col(e).isZero()) live.push_back(e);
        TUMatrix bl(h, static_cast<int>(live.size()));
        for (size_t i = 0; i < live.size(); ++i)
          bl.col(static_cast<int>(i)) = b.col(live[i]);
        ZonotopalCone cone = zonotopal_cone(bl);
        r.expect(coeffs.size() == cone.rays.size(), "ray count mismatch");
        if (coeffs.size() != cone.rays.size()) continue;
        for (size_t k = 0; k < cone.rays.size(); ++k) {
          Rational want(0);
          for (int e : live)
            if ((b.col(e) * b.col(e).transpose()).eval() == cone.rays[k])
              want += c.lengths[e];
          r.expect(coeffs[k] == want, "coefficient != edge-length total");
        }
      }
    } catch (const std::exception& e) {
      r.expect(false, e.what());
    }
    out.push_back(r.check);
  }

  {  // 6. delone oracle
    Reporter r("delone-oracle");
    try {
      for (int n = 1; n <= 5; ++n) {
        QuadForm xn = detail::qf2(1, Rational(1, n),
                                  Rational(1, static_cast<std::int64_t>(n) * n));
        QuadForm yn =
            detail::qf2(Rational(1, static_cast<std::int64_t>(n) * n), 0, 0);
        r.expect(g2_equivalent(xn, yn), "X_n !~ Y_n at n=" + std::to_string(n));
      }
      r.expect(!g2_equivalent(detail::qf2(1, 0, 0), detail::qf2(0, 0, 0)),
               "limits wrongly equivalent");

      std::mt19937 rng(static_cast<std::uint32_t>(seed) + 1);
      auto random_gl2z = [&rng]() {
        Eigen::MatrixXi x = Eigen::MatrixXi::Identity(2, 2);
        for (int s = 0; s < 3; ++s) {
          switch (rng() % 3) {
            case 0: x.col(1) += (rng() % 2 ? 1 : -1) * x.col(0); break;
            case 1: x.col(0) += (rng() % 2 ? 1 : -1) * x.col(1); break;
            default: x.col(0).swap(x.col(1)); break;
          }
        }
        return x;
      };
      int done = 0;
      while (done < 100) {
        QuadForm d = detail::qf2(1 + static_cast<int>(rng() % 3), 0,
                                 1 + static_cast<int>(rng() % 3));
        if (rng() % 3 == 0) d(0, 1) = d(1, 0) = Rational(-1);
        if (!is_positive_definite(d)) continue;
        Eigen::MatrixXi x = random_gl2z();
        RationalMatrix xr(2, 2);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) xr(i, j) = Rational(x(i, j));
        QuadForm q = (xr.transpose() * d * xr).eval();
        DelonePeriod w3, w4;
        try {
          w3 = delone_subdivision(q, 3);
          w4 = delone_subdivision(q, 4);
        } catch (const std::invalid_argument&) {
          continue;  // window guard; skip skew samples
        }
        r.expect(w3 == w4, "window 3 vs 4 instability");
        G2Class cls = classify_g2(q).cls;
        if (cls == G2Class::D1_triangulated) {
          r.expect(w3.cells.size() == 2, "D1 form without 2 triangles");
          for (const auto& c : w3.cells)
            r.expect(c.size() == 3, "D1 cell not a triangle");
        } else {
          r.expect(cls == G2Class::D2_square, "definite form not D1/D2");
          r.expect(w3.cells.size() == 1 && w3.cells[0].size() == 4,
                   "D2 form without 1 quadrilateral");
        }
        ++done;
      }
    } catch (const std::exception& e) {
      r.expect(false, e.what());
    }
    out.push_back(r.check);
  }

  {  // 7. automorphism theorem
    Reporter r("automorphism-theorem");
    try {
      struct Case { TUMatrix a; BinaryMatroid m; };
      std::vector<Case> cases{{u23_matrix(), uniform(2, 3)}, {mk4_matrix(), mk4()}};
      for (const auto& [a, m] : cases) {
        const int n = static_cast<int>(a.cols());
        ZonotopalCone cone = zonotopal_cone(a);
        std::vector<int> pi(n);
        std::iota(pi.begin(), pi.end(), 0);
        std::uint64_t autos = 0, realized = 0;
        do {
          bool is_auto = true;
          for (ElementSet c : m.circuits()) {
            ElementSet image = 0;
            for (int i = 0; i < n; ++i)
              if (c & (ElementSet{1} << i)) image |= ElementSet{1} << pi[i];
            if (!m.is_circuit(image)) { is_auto = false; break; }
          }
          bool is_realized = false;
          try {
            Eigen::MatrixXi x = realize_matroid_iso(a, a, pi);
            is_realized = true;
            for (int i = 0; i < n; ++i)
              r.expect(x * cone.rays[i] * x.transpose() == cone.rays[pi[i]],
                       "witness does not permute rays");
          } catch (const std::invalid_argument&) {
          }
          r.expect(is_auto == is_realized, "realized rays != Aut(M)");
          autos += is_auto;
          realized += is_realized;
        } while (std::next_permutation(pi.begin(), pi.end()));
        r.expect(autos == realized, "realized count != automorphism count");
        r.expect(autos == automorphism_group_order(m), "group order mismatch");
      }
      r.expect(automorphism_group_order(mk4()) == 24, "|Aut(MK4)| != 24");
      r.expect(automorphism_group_order(fano()) == 168, "|Aut(F7)| != 168");
      r.expect(detail::count_circuit_permutations(mk4()) == 24,
               "brute-force |Aut(MK4)| != 24");
      r.expect(detail::count_circuit_permutations(fano()) == 168,
               "brute-force |Aut(F7)| != 168");
    } catch (const std::exception& e) {
      r.expect(false, e.what());
    }
    out.push_back(r.check);
  }

  CoverMap a3 = build_cover_a3();
  CoverMap a2 = build_cover_a2();
  {  // 8. covers
    Reporter r("covers");
    try {
      r.expect(a3.assignments.size() == 7, "a3 chart count != 7");
      r.expect(a3.overlaps.size() == 672, "a3 overlap count != 672");
      BinaryMatroid k = mk4();
      for (int i = 0; i < 7; ++i)
        r.expect(is_isomorphic_matroid(a3.source.deleted(ElementSet{1} << i), k)
                     .has_value(),
                 "F7 deletion " + std::to_string(i) + " != MK4");
      r.expect(a2.assignments.size() == 4, "a2 chart count != 4");
      r.expect(a2.overlaps.size() == 24, "a2 overlap count != 24");
      r.expect(modp_ray_classes(2, 3) == 4, "modp(2,3) != 4");
      r.expect(modp_ray_classes(3, 2) == 7, "modp(3,2) != 7");
    } catch (const std::exception& e) {
      r.expect(false, e.what());
    }
    out.push_back(r.check);
  }

  {  // 9. property suites
    Reporter r("property-suites");
    try {
      std::mt19937 rng(static_cast<std::uint32_t>(seed) + 2);
      // Certificate relabel invariance over all g <= 3 cells.
      for (int g = 2; g <= std::min(genus_max, 3); ++g)
        for (const Cell& cell : posets.at(g).cells) {
          CanonicalCert cert = canonical_certificate(cell.graph);
          for (int t = 0; t < 100; ++t) {
            std::vector<int> perm(cell.graph.num_vertices());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            r.expect(canonical_certificate(cell.graph.relabeled(perm)) == cert,
                     "certificate not relabel-invariant");
          }
        }
      // Contraction preserves genus, exhaustively for g <= 4.
      for (int g = 2; g <= std::min(genus_max, 4); ++g)
        for (const Cell& cell : posets.at(g).cells)
          for (int e = 0; e < cell.graph.num_edges(); ++e)
            r.expect(genus(contract_edge(cell.graph, e)) == g,
                     "contraction changed genus");
      // Simplify idempotence on all harvested matroids.
      for (int g = 2; g <= std::min(genus_max, 4); ++g)
        for (const Cell& cell : posets.at(g).cells) {
          BinaryMatroid s = simplify(cographic_matroid(cell.graph)).matroid;
          SimplifyResult again = simplify(s);
          r.expect(again.matroid.ground_size() == s.ground_size() &&
                       again.matroid.circuits() == s.circuits(),
                   "simplify not idempotent");
        }
      // realize_matroid_iso contract on every cover witness.
      for (const CoverMap* c : {&a3, &a2}) {
        auto pi_at = [&](int i, int k) {
          return c->assignments[i][k - (k > i ? 1 : 0)];
        };
        for (const OverlapWitness& w : c->overlaps) {
          r.expect(std::abs(detail::int_det(w.x)) == 1, "witness not unimodular");
          for (int e = 0; e < c->source.ground_size(); ++e) {
            if (!((w.subset >> e) & 1)) continue;
            Eigen::VectorXi lhs = w.x * c->target_matrix.col(pi_at(w.i, e));
            Eigen::VectorXi rhs = c->target_matrix.col(pi_at(w.j, e));
            r.expect(lhs == rhs || lhs == (-rhs).eval(),
                     "witness violates column identity");
          }
        }
      }
    } catch (const std::exception& e) {
      r.expect(false, e.what());
    }
    out.push_back(r.check);
  }

  return out;
}

}  // namespace tropmod::verify

#endif
