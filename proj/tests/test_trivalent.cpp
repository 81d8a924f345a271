#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "test_helpers.hpp"
#include "tropmod/trivalent.hpp"

using namespace tropmod;
using namespace tropmod::testing;

namespace {

// Second, independent generator: random half-edge pairings run to
// saturation. Every 3-regular multigraph on n vertices arises from a
// perfect matching on the 3n half-edges.
std::set<std::string> halfedge_sample(int g, int rounds, unsigned seed) {
  const int n = 2 * g - 2;
  std::mt19937 rng(seed);
  std::vector<int> halves;
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < 3; ++k) halves.push_back(v);
  std::set<std::string> certs;
  for (int r = 0; r < rounds; ++r) {
    std::shuffle(halves.begin(), halves.end(), rng);
    std::vector<Edge> edges;
    for (size_t i = 0; i + 1 < halves.size(); i += 2)
      edges.emplace_back(halves[i], halves[i + 1]);
    WeightedGraph graph(std::vector<int>(n, 0), std::move(edges));
    if (!graph.is_connected()) continue;
    certs.insert(canonical_certificate(graph).bytes);
  }
  return certs;
}

}  // namespace

TEST_CASE("counts for g = 2..5") {
  CHECK(enumerate_trivalent(2).size() == 2);
  CHECK(enumerate_trivalent(3).size() == 5);
  CHECK(enumerate_trivalent(4).size() == 17);
  CHECK(enumerate_trivalent(5).size() == 71);
}

TEST_CASE("g=2 gives theta and dumbbell") {
  auto graphs = enumerate_trivalent(2);
  REQUIRE(graphs.size() == 2);
  std::set<std::string> got;
  for (const auto& g : graphs) got.insert(canonical_certificate(g).bytes);
  std::set<std::string> want = {canonical_certificate(theta()).bytes,
                                canonical_certificate(dumbbell()).bytes};
  CHECK(got == want);
}

TEST_CASE("outputs are valid, deduped, and sorted") {
  for (int g = 2; g <= 4; ++g) {
    auto graphs = enumerate_trivalent(g);
    std::set<std::string> certs;
    std::string prev;
    for (const auto& graph : graphs) {
      CHECK(is_valid_type(graph, g));
      CHECK(graph.total_weight() == 0);
      for (int v = 0; v < graph.num_vertices(); ++v) CHECK(graph.degree(v) == 3);
      std::string cert = canonical_certificate(graph).bytes;
      CHECK(certs.insert(cert).second);
      CHECK(prev < cert);
      prev = cert;
    }
  }
}

TEST_CASE("cross-check against half-edge pairings, g <= 4") {
  for (int g = 2; g <= 4; ++g) {
    auto graphs = enumerate_trivalent(g);
    std::set<std::string> ours;
    for (const auto& graph : graphs) ours.insert(canonical_certificate(graph).bytes);
    // Saturation: enough rounds that every class is hit with margin.
    auto sampled = halfedge_sample(g, 20000 * g, 987 + g);
    CHECK(sampled == ours);
  }
}

TEST_CASE("range errors") {
  CHECK_THROWS(enumerate_trivalent(1));
  CHECK_THROWS(enumerate_trivalent(7));
}
