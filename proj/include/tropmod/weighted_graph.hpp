#ifndef TROPMOD_WEIGHTED_GRAPH_HPP
#define TROPMOD_WEIGHTED_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tropmod {

/// An edge of a multigraph, stored with endpoints normalized u <= v.
/// u == v is a loop.
struct Edge {
  int u;
  int v;

  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v;
  }
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

/// A combinatorial type (G, w): connected multigraph with nonnegative
/// integer vertex weights. Loops and parallel edges are allowed. Edges
/// keep their construction order, so contraction results are
/// reproducible; isomorphism invariants ignore edge order.
class WeightedGraph {
 public:
  WeightedGraph(std::vector<int> weights, std::vector<Edge> edges);

  int num_vertices() const { return static_cast<int>(weights_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& weights() const { return weights_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int total_weight() const;

  bool is_connected() const;
  /// Loops count 2 toward the degree of their base vertex.
  int degree(int v) const;
  int loops_at(int v) const;

  /// Bit-exact text form: n=<k>; w=<w0,...>; E=<(u,v),...> with edges sorted.
  std::string to_text() const;
  static WeightedGraph from_text(const std::string& s);

  /// Applies a vertex relabeling: vertex v becomes perm[v].
  WeightedGraph relabeled(const std::vector<int>& perm) const;

 private:
  std::vector<int> weights_;
  std::vector<Edge> edges_;
};

/// Isomorphism-class certificate; equal strings iff isomorphic as
/// weighted multigraphs.
struct CanonicalCert {
  std::string bytes;
  friend bool operator==(const CanonicalCert& a, const CanonicalCert& b) {
    return a.bytes == b.bytes;
  }
  friend bool operator<(const CanonicalCert& a, const CanonicalCert& b) {
    return a.bytes < b.bytes;
  }
};

/// g(G) + |w| = |E| - |V| + 1 + sum of weights. Throws if disconnected.
int genus(const WeightedGraph& g);

/// Connected, every weight-0 vertex has degree >= 3, genus matches.
bool is_valid_type(const WeightedGraph& g, int target_genus);

/// Contracts edge at index e. A loop is deleted and its base vertex
/// weight increases by 1; a nonloop edge merges its endpoints, adding
/// the weights. Parallel copies of a contracted nonloop edge become loops.
WeightedGraph contract_edge(const WeightedGraph& g, int edge_index);

CanonicalCert canonical_certificate(const WeightedGraph& g);

/// Order of Aut(G, w) acting on E(G): the number of edge permutations
/// induced by weight-preserving vertex automorphisms.
std::uint64_t automorphism_edge_group_order(const WeightedGraph& g);

}  // namespace tropmod

#endif
