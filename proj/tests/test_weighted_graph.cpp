#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "test_helpers.hpp"
#include "tropmod/weighted_graph.hpp"

using namespace tropmod;
using namespace tropmod::testing;

namespace {

// Independent oracle: count edge permutations phi admitting a
// weight-preserving vertex permutation pi with matching endpoints, by
// brute force over all pi and all phi. Only usable for tiny graphs.
std::uint64_t brute_force_edge_aut_order(const WeightedGraph& g) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  std::vector<int> pi(n), phi(m);
  std::iota(pi.begin(), pi.end(), 0);
  std::set<std::vector<int>> valid_phis;
  do {
    bool wok = true;
    for (int v = 0; v < n && wok; ++v)
      if (g.weights()[pi[v]] != g.weights()[v]) wok = false;
    if (!wok) continue;
    std::iota(phi.begin(), phi.end(), 0);
    do {
      bool ok = true;
      for (int e = 0; e < m && ok; ++e) {
        Edge mapped(pi[g.edges()[e].u], pi[g.edges()[e].v]);
        if (!(mapped == g.edges()[phi[e]])) ok = false;
      }
      if (ok) valid_phis.insert(phi);
    } while (std::next_permutation(phi.begin(), phi.end()));
  } while (std::next_permutation(pi.begin(), pi.end()));
  return valid_phis.size();
}

}  // namespace

TEST_CASE("genus") {
  CHECK(genus(theta()) == 2);
  CHECK(genus(bouquet(0, 3)) == 3);
  CHECK(genus(genus3_figure()) == 3);
  CHECK(genus(dumbbell()) == 2);
  CHECK(genus(k4()) == 3);
  WeightedGraph disconnected({0, 0}, {{0, 0}, {0, 0}, {1, 1}, {1, 1}});
  CHECK_THROWS(genus(disconnected));
}

TEST_CASE("is_valid_type") {
  CHECK(is_valid_type(theta(), 2));
  CHECK_FALSE(is_valid_type(theta(), 3));
  CHECK(is_valid_type(genus3_figure(), 3));
  WeightedGraph path({0, 0}, {{0, 1}});
  CHECK_FALSE(is_valid_type(path, 0));
  CHECK(is_valid_type(bouquet(0, 3), 3));
}

TEST_CASE("contract_edge") {
  // theta: contracting any edge merges the vertices into 2 loops
  WeightedGraph c = contract_edge(theta(), 0);
  CHECK(c.num_vertices() == 1);
  CHECK(c.num_edges() == 2);
  CHECK(c.loops_at(0) == 2);
  CHECK(genus(c) == 2);

  // loop contraction bumps the weight
  WeightedGraph two_loops = bouquet(2);
  WeightedGraph one = contract_edge(two_loops, 0);
  CHECK(one.weights()[0] == 1);
  CHECK(one.loops_at(0) == 1);
  CHECK(genus(one) == 2);

  // figure graph: contracting the loop gives weights (1,1), 2 parallel edges
  WeightedGraph fig = genus3_figure();
  WeightedGraph fc = contract_edge(fig, 2);
  CHECK(fc.num_vertices() == 2);
  CHECK(fc.num_edges() == 2);
  std::multiset<int> ws(fc.weights().begin(), fc.weights().end());
  CHECK(ws == std::multiset<int>{1, 1});
  CHECK(genus(fc) == 3);

  CHECK_THROWS(contract_edge(theta(), 5));
}

TEST_CASE("certificate relabel invariance") {
  std::mt19937 rng(12345);
  for (const WeightedGraph& g : {theta(), dumbbell(), k4(), genus3_figure()}) {
    CanonicalCert base = canonical_certificate(g);
    for (int trial = 0; trial < 100; ++trial) {
      auto p = random_permutation(g.num_vertices(), rng);
      CHECK(canonical_certificate(g.relabeled(p)) == base);
    }
  }
}

TEST_CASE("certificate separates classes") {
  CHECK_FALSE(canonical_certificate(theta()) == canonical_certificate(dumbbell()));
  // weights matter
  WeightedGraph loop0({1}, {{0, 0}});
  WeightedGraph loop1({0}, {{0, 0}, {0, 0}});
  CHECK_FALSE(canonical_certificate(loop0) == canonical_certificate(loop1));
}

TEST_CASE("certificate size limit") {
  std::vector<int> w(17, 1);
  std::vector<Edge> es;
  for (int i = 0; i < 16; ++i) es.emplace_back(i, i + 1);
  CHECK_THROWS(canonical_certificate(WeightedGraph(w, es)));
}

TEST_CASE("edge automorphism group order") {
  CHECK(automorphism_edge_group_order(theta()) == 6);
  CHECK(automorphism_edge_group_order(dumbbell()) == 2);
  CHECK(automorphism_edge_group_order(bouquet(0, 5)) == 1);
  CHECK(automorphism_edge_group_order(k4()) == 24);
}

TEST_CASE("edge automorphisms match brute force on small graphs") {
  std::vector<WeightedGraph> graphs = {
      theta(), dumbbell(), genus3_figure(), bouquet(2), bouquet(3),
      WeightedGraph({0, 0, 0}, {{0, 1}, {1, 2}, {0, 2}, {0, 1}}),
      WeightedGraph({1, 0}, {{0, 1}, {0, 1}, {1, 1}}),
      WeightedGraph({0, 1, 0}, {{0, 1}, {1, 2}, {0, 2}, {0, 2}}),
  };
  for (const auto& g : graphs) {
    REQUIRE(g.num_edges() <= 6);
    CHECK(automorphism_edge_group_order(g) == brute_force_edge_aut_order(g));
  }
}

TEST_CASE("text round trip") {
  for (const WeightedGraph& g : {theta(), dumbbell(), k4(), genus3_figure()}) {
    std::string text = g.to_text();
    CHECK(WeightedGraph::from_text(text).to_text() == text);
  }
  CHECK(theta().to_text() == "n=2;w=0,0;E=(0,1),(0,1),(0,1)");
}
