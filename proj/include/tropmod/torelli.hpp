#ifndef TROPMOD_TORELLI_HPP
#define TROPMOD_TORELLI_HPP

#include <string>
#include <utility>
#include <vector>

#include "tropmod/matroid.hpp"
#include "tropmod/quadform.hpp"
#include "tropmod/weighted_graph.hpp"

namespace tropmod {

/// Tropical curve (G, l, w): combinatorial type plus edge lengths.
struct MetricCurve {
  WeightedGraph graph;
  std::vector<Rational> lengths;
};

/// g x g Gram form B diag(l) B^T of the curve's cycle pairing, padded
/// by zero rows/columns for the vertex weights (g = genus).
QuadForm tropical_jacobian(const MetricCurve& c);

/// Combinatorial Torelli image of a cell: simplify(M*(G)).
BinaryMatroid torelli_cell_image(const WeightedGraph& g);

/// Coefficients of the Jacobian on the rays of the cographic zonotopal
/// cone, aligned with zonotopal_cone(tu_representation_cographic(G))
/// (duplicate rays merged, zero columns absent). Each coefficient is
/// the total length of the edges mapping to that ray.
std::vector<Rational> jacobian_in_cographic_cone(const MetricCurve& c);

/// A_g^cogr cell: a simple cographic matroid; graded by ground size.
struct SchottkyCell {
  BinaryMatroid matroid;
  int rank = 0;  // = ground size
  int id = 0;
};

struct SchottkyPoset {
  int genus = 0;
  std::vector<SchottkyCell> cells;
  std::vector<std::pair<int, int>> covers;  // (lower id, upper id)
};

/// Isomorphism classes of simple cographic matroids of rank <= g,
/// harvested over the cells of P_g plus the empty matroid. Covers are
/// one-element deletions. Cell totals for g = 2..5: 4, 9, 25, 92.
SchottkyPoset build_schottky_poset(int g);

std::vector<int> schottky_f_vector(const SchottkyPoset& p);

std::vector<SchottkyCell> schottky_maximal_cells(const SchottkyPoset& p);

std::string schottky_to_json(const SchottkyPoset& p);
std::string schottky_to_dot(const SchottkyPoset& p);

/// Table report: computed M_g^tr and A_g^cogr columns for g = 2..5
/// next to the literature A_g^tr values (marked as reference).
std::string reproduce_tables();

}  // namespace tropmod

#endif
