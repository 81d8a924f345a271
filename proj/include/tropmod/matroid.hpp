#ifndef TROPMOD_MATROID_HPP
#define TROPMOD_MATROID_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "tropmod/weighted_graph.hpp"

namespace tropmod {

/// Ground-set subset as a bitmask (ground size <= 12 throughout).
using ElementSet = std::uint32_t;

/// A matroid on ground set 0..n-1. Regular matroids are stored by a
/// binary (GF(2)) representation; the uniform matroids that are not
/// binary fall back to an explicit circuit list.
class BinaryMatroid {
 public:
  /// rep rows are bitmasks over the ground set; rank = GF(2) row rank.
  static BinaryMatroid from_binary_rep(int ground_size, std::vector<ElementSet> rep_rows);
  static BinaryMatroid from_circuits(int ground_size, int rank,
                                     std::vector<ElementSet> circuits);

  int ground_size() const { return n_; }
  int rank() const { return rank_; }
  bool has_binary_rep() const { return !rep_rows_.empty() || rank_ == 0; }
  const std::vector<ElementSet>& rep_rows() const { return rep_rows_; }

  /// All circuits, sorted ascending as bitmasks.
  const std::vector<ElementSet>& circuits() const { return circuits_; }

  bool is_simple() const;
  bool is_circuit(ElementSet s) const;

  /// Deletes the elements in `drop`; remaining elements are relabeled
  /// densely, preserving order.
  BinaryMatroid deleted(ElementSet drop) const;

  /// `{n, rank, rep_rows:[bitstrings]}` plus sorted circuit lists.
  std::string to_json() const;

 private:
  BinaryMatroid() = default;
  void compute_circuits_from_rep();

  int n_ = 0;
  int rank_ = 0;
  std::vector<ElementSet> rep_rows_;
  std::vector<ElementSet> circuits_;
};

/// Integer matrix with entries in {-1, 0, 1} whose square minors all
/// have determinant 0 or +-1.
using TUMatrix = Eigen::MatrixXi;

/// Rank-1 integer ray generators v_i v_i^T of a zonotopal cone.
struct ZonotopalCone {
  std::vector<Eigen::MatrixXi> rays;
};

/// Minor enumeration; matrices over 8x14 are rejected.
bool is_totally_unimodular(const Eigen::MatrixXi& a);

/// Cographic matroid M*(G): rows of the binary rep span the cycle
/// space of G; circuits are the bonds of G.
BinaryMatroid cographic_matroid(const WeightedGraph& g);

/// Signed fundamental-cycle (network) matrix: g(G) x |E|, totally
/// unimodular, column matroid over GF(2) equal to M*(G). Rows follow
/// the non-tree edges in index order; parallel copies of an edge
/// alternate orientation so that parallel cycles meet tree paths with
/// opposite signs.
TUMatrix tu_representation_cographic(const WeightedGraph& g);

/// Element map image for deleted elements.
constexpr int kDeleted = -1;

struct SimplifyResult {
  BinaryMatroid matroid;
  std::vector<int> element_map;  // old element -> new element or kDeleted
};

/// Removes loops (zero columns) and collapses parallel classes to their
/// lowest-index representative.
SimplifyResult simplify(const BinaryMatroid& m);

/// Lexicographically least ground-set bijection carrying circuits onto
/// circuits, or nullopt.
std::optional<std::vector<int>> is_isomorphic_matroid(const BinaryMatroid& m,
                                                      const BinaryMatroid& n);

/// Number of ground-set permutations preserving the circuit set.
std::uint64_t automorphism_group_order(const BinaryMatroid& m);

/// X in GL_g(Z) with X * a_i = +- b_pi(i) for all columns, built by
/// reducing both matrices to [I | *] form and matching signs by row and
/// column negations. Throws if pi is not a matroid isomorphism.
Eigen::MatrixXi realize_matroid_iso(const TUMatrix& a, const TUMatrix& b,
                                    const std::vector<int>& pi);

/// Outer products of the columns; duplicate rays merged.
ZonotopalCone zonotopal_cone(const TUMatrix& a);

BinaryMatroid fano();
BinaryMatroid mk4();
BinaryMatroid uniform(int d, int n);

/// Fixed TU representatives used throughout: the 3x6 matrix for M(K_4)
/// and the 2x3 matrix for U_{2,3}.
TUMatrix mk4_matrix();
TUMatrix u23_matrix();

/// Column matroid over GF(2) of an integer matrix (entries mod 2).
BinaryMatroid column_matroid_mod2(const Eigen::MatrixXi& a);

}  // namespace tropmod

#endif
