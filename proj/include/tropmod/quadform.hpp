#ifndef TROPMOD_QUADFORM_HPP
#define TROPMOD_QUADFORM_HPP

#include <optional>
#include <string>
#include <vector>

#include "tropmod/matroid.hpp"
#include "tropmod/rational.hpp"

namespace tropmod {

/// Symmetric g x g rational matrix; validity (symmetry + positive
/// semidefiniteness) is checked by is_valid_form.
using QuadForm = RationalMatrix;

/// Parses "a,b;b,c" (semicolon-separated rows, "p/q" literals allowed).
QuadForm parse_quadform(const std::string& text);

/// True iff Q is symmetric positive semidefinite (exact elimination, no
/// floating point). Throws on non-square or non-symmetric input.
bool is_valid_form(const QuadForm& q);

bool is_positive_definite(const QuadForm& q);

int form_rank(const QuadForm& q);

/// One period of a Delone subdivision: maximal cells as integer vertex
/// lists, each translated so its lex-least vertex is the origin,
/// deduplicated modulo Z^g.
struct DelonePeriod {
  std::vector<std::vector<Eigen::VectorXi>> cells;
};

bool operator==(const DelonePeriod& a, const DelonePeriod& b);

/// Delone subdivision of a positive definite form, g <= 3. Lifts the
/// lattice points of [-window, window]^g to (x, x^T Q x), takes the
/// lower-hull cells with vertex 0 and normalizes them by translation.
/// A retained cell reaching the window boundary raises "increase
/// window"; semidefinite input raises "definite only".
DelonePeriod delone_subdivision(const QuadForm& q, int window);

enum class G2Class { D1_triangulated, D2_square, D3_segment, D4_point };

struct G2Result {
  G2Class cls;
  QuadForm reduced;
  /// transform^T * Q * transform = reduced, |det| = 1.
  Eigen::MatrixXi transform;
};

/// Reduces a 2x2 form into the fundamental cone
/// C = cone{[[0,0],[0,1]], [[1,0],[0,1]], [[2,-1],[-1,2]]} and
/// classifies its Delone type.
G2Result classify_g2(const QuadForm& q);

/// GL_2(Z)-equivalence via equality of canonical reduced forms.
bool g2_equivalent(const QuadForm& a, const QuadForm& b);

/// Nonnegative rational coefficients c with Q = sum c_i * ray_i, or
/// nullopt. Throws "not a simplicial cone" for dependent rays.
std::optional<std::vector<Rational>> cone_membership(const QuadForm& q,
                                                     const ZonotopalCone& cone);

std::string delone_to_json(const DelonePeriod& d);

}  // namespace tropmod

#endif
