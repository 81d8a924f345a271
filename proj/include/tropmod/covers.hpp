#ifndef TROPMOD_COVERS_HPP
#define TROPMOD_COVERS_HPP

#include <string>
#include <vector>

#include <Eigen/Core>

#include "tropmod/matroid.hpp"

namespace tropmod {

/// The fan FP^n: rays e_1..e_n and e_{n+1} = -e_1-...-e_n, with a cone
/// for every subset of at most n rays.
struct FPFan {
  int n = 0;
  std::vector<Eigen::VectorXi> rays;
  std::vector<std::vector<int>> cones;  // sorted ray-index subsets, |S| <= n
};

FPFan build_fp(int n);

/// One verified gluing overlap: on cone(S) inside the maximal cones
/// i-hat and j-hat the two chart maps differ by x in GL_g(Z).
struct OverlapWitness {
  int i = 0;
  int j = 0;
  ElementSet subset = 0;
  Eigen::MatrixXi x;
};

/// A covering morphism FP^n -> A_g glued from one chart per maximal
/// cone. assignments[i] lists pi_i-hat on the sorted ground set minus
/// i; overlaps holds a witness for every (i, j, S).
struct CoverMap {
  FPFan fan;
  BinaryMatroid source;
  BinaryMatroid target;
  TUMatrix target_matrix;
  std::vector<std::vector<int>> assignments;
  std::vector<OverlapWitness> overlaps;
};

/// FP^6 -> A_3 via the Fano matroid: all seven deletions F_7 minus i
/// are identified with MK_4 (lexicographically least bijections) and
/// all 672 pairwise overlaps are certified by GL_3(Z) matrices.
CoverMap build_cover_a3();

/// FP^3 -> A_2 via U_{2,4}: four charts onto U_{2,3}, 24 overlaps.
CoverMap build_cover_a2();

/// Classes of nonzero vectors in (Z/p)^g modulo negation, counted by
/// brute-force orbit enumeration.
long long modp_ray_classes(int g, int p);

std::string cover_to_json(const CoverMap& c);

}  // namespace tropmod

#endif
