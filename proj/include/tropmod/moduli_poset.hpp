#ifndef TROPMOD_MODULI_POSET_HPP
#define TROPMOD_MODULI_POSET_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropmod/weighted_graph.hpp"

namespace tropmod {

/// One cell of the moduli poset: a combinatorial type with its rank
/// (= edge count) and certificate. Ids are dense, assigned in
/// (rank, certificate) order.
struct Cell {
  WeightedGraph graph;
  int rank;
  CanonicalCert cert;
  int id;
};

/// Graded poset of cells with cover relations (lower id, upper id).
struct CellPoset {
  int genus = 0;
  std::vector<Cell> cells;
  std::set<std::pair<int, int>> covers;
};

/// Closes the maximal (trivalent) cells of genus g under 1-edge
/// contractions, deduplicating by certificate. Cover (c', c) is present
/// iff c' is a 1-edge contraction of c up to isomorphism.
CellPoset build_moduli_poset(int g);

/// Same closure, seeded from an explicit list of maximal cells.
CellPoset build_poset_from_maximal(int g, const std::vector<WeightedGraph>& maximal);

/// Entry i counts cells of rank i.
std::vector<int> f_vector(const CellPoset& p);

/// Cells with no upper cover.
std::vector<Cell> maximal_cells(const CellPoset& p);

std::string poset_to_json(const CellPoset& p);
std::string poset_to_dot(const CellPoset& p);

}  // namespace tropmod

#endif
