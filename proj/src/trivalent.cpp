#include "tropmod/trivalent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tropmod {

namespace {

// Backtracks over the upper-triangular multiplicity matrix (diagonal =
// loop counts, a loop adding 2 to its vertex degree), filling cells in
// row-major order with degree feasibility pruning.
struct TrivalentSearch {
  int n;
  std::vector<std::vector<int>> m;
  std::vector<int> deg;
  std::map<CanonicalCert, WeightedGraph> found;

  explicit TrivalentSearch(int vertices)
      : n(vertices), m(vertices, std::vector<int>(vertices, 0)), deg(vertices, 0) {}

  // Degree still placeable at vertex v using cells not yet assigned:
  // cells (v, j) for j >= col when in row v, plus nothing afterwards.
  void fill(int row, int col) {
    if (row == n) {
      emit();
      return;
    }
    if (col == n) {
      if (deg[row] != 3) return;  // row complete, degree must be exact
      // Symmetry prune: keep only labelings whose filled prefix is
      // lex-minimal under adjacent vertex transpositions; the global
      // lex-min labeling of every isomorphism class survives.
      for (int i = 0; i + 1 <= row; ++i)
        if (prefix_greater_after_swap(i, row)) return;
      fill(row + 1, row + 1);
      return;
    }
    int cap;
    if (col == row) {
      cap = (3 - deg[row]) / 2;  // loops add 2
      for (int k = 0; k <= cap; ++k) {
        m[row][row] = k;
        deg[row] += 2 * k;
        fill(row, col + 1);
        deg[row] -= 2 * k;
        m[row][row] = 0;
      }
    } else {
      cap = std::min(3 - deg[row], 3 - deg[col]);
      for (int k = 0; k <= cap; ++k) {
        m[row][col] = m[col][row] = k;
        deg[row] += k;
        deg[col] += k;
        fill(row, col + 1);
        deg[row] -= k;
        deg[col] -= k;
        m[row][col] = m[col][row] = 0;
      }
    }
  }

  // True when the filled prefix (rows 0..r) is strictly greater than
  // its image under the transposition (i, i+1).
  bool prefix_greater_after_swap(int i, int r) const {
    auto t = [&](int v) { return v == i ? i + 1 : (v == i + 1 ? i : v); };
    for (int a = 0; a <= r; ++a)
      for (int b = a; b < n; ++b) {
        int swapped = m[t(a)][t(b)];
        if (m[a][b] != swapped) return m[a][b] > swapped;
      }
    return false;
  }

  void emit() {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int k = 0; k < m[u][u]; ++k) edges.emplace_back(u, u);
      for (int v = u + 1; v < n; ++v)
        for (int k = 0; k < m[u][v]; ++k) edges.emplace_back(u, v);
    }
    WeightedGraph g(std::vector<int>(n, 0), std::move(edges));
    if (!g.is_connected()) return;
    CanonicalCert cert = canonical_certificate(g);
    found.emplace(std::move(cert), std::move(g));
  }
};

}  // namespace

std::vector<WeightedGraph> enumerate_trivalent(int g) {
  if (g < 2 || g > 6) throw std::invalid_argument("genus out of range");
  TrivalentSearch search(2 * g - 2);
  search.fill(0, 0);
  std::vector<WeightedGraph> out;
  out.reserve(search.found.size());
  for (auto& [cert, graph] : search.found) out.push_back(graph);
  return out;
}

}  // namespace tropmod
