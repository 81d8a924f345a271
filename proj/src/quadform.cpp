#include "tropmod/quadform.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tropmod {

namespace {

void require_symmetric(const QuadForm& q) {
  if (q.rows() != q.cols()) throw std::invalid_argument("not square");
  for (int i = 0; i < q.rows(); ++i)
    for (int j = i + 1; j < q.cols(); ++j)
      if (q(i, j) != q(j, i)) throw std::invalid_argument("not symmetric");
}

enum class SolveStatus { kUnique, kInconsistent, kUnderdetermined };

// Exact Gaussian elimination on [a | b]; unique solutions only.
SolveStatus solve_linear(RationalMatrix a, RationalVector b, RationalVector* out) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  std::vector<int> pivot_row_of_col(cols, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(r));
    std::swap(b(pivot), b(r));
    Rational inv = Rational(1) / a(r, c);
    a.row(r) *= inv;
    b(r) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      a.row(i) -= f * a.row(r);
      b(i) -= f * b(r);
    }
    pivot_row_of_col[c] = r;
    ++r;
  }
  for (int c = 0; c < cols; ++c)
    if (pivot_row_of_col[c] < 0) return SolveStatus::kUnderdetermined;
  for (int i = r; i < rows; ++i)
    if (!b(i).is_zero()) return SolveStatus::kInconsistent;
  out->resize(cols);
  for (int c = 0; c < cols; ++c) (*out)(c) = b(pivot_row_of_col[c]);
  return SolveStatus::kUnique;
}

Rational evaluate(const QuadForm& q, const Eigen::VectorXi& x) {
  Rational v(0);
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j)
      v += q(i, j) * Rational(static_cast<std::int64_t>(x(i)) * x(j));
  return v;
}

bool lex_less(const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

}  // namespace

QuadForm parse_quadform(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream row_stream(text);
  std::string row;
  while (std::getline(row_stream, row, ';')) {
    std::vector<Rational> entries;
    std::istringstream entry_stream(row);
    std::string entry;
    while (std::getline(entry_stream, entry, ',')) entries.push_back(Rational::parse(entry));
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  const int g = static_cast<int>(rows.size());
  QuadForm q(g, g);
  for (int i = 0; i < g; ++i) {
    if (static_cast<int>(rows[i].size()) != g) throw std::invalid_argument("ragged matrix");
    for (int j = 0; j < g; ++j) q(i, j) = rows[i][j];
  }
  return q;
}

bool is_valid_form(const QuadForm& q) {
  require_symmetric(q);
  // Symmetric elimination: PSD iff every pivot is >= 0 and a zero
  // diagonal entry forces a zero row in the remaining block.
  QuadForm a = q;
  const int g = static_cast<int>(a.rows());
  for (int k = 0; k < g; ++k) {
    if (a(k, k).sign() < 0) return false;
    if (a(k, k).is_zero()) {
      for (int j = k + 1; j < g; ++j)
        if (!a(k, j).is_zero()) return false;
      continue;
    }
    for (int i = k + 1; i < g; ++i) {
      Rational f = a(i, k) / a(k, k);
      for (int j = k; j < g; ++j) a(i, j) -= f * a(k, j);
      for (int j = k; j < g; ++j) a(j, i) = a(i, j);
    }
  }
  return true;
}

int form_rank(const QuadForm& q) {
  RationalMatrix a = q;
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(r));
    for (int i = r + 1; i < rows; ++i) {
      if (a(i, c).is_zero()) continue;
      Rational f = a(i, c) / a(r, c);
      a.row(i) -= f * a.row(r);
    }
    ++r;
  }
  return r;
}

bool is_positive_definite(const QuadForm& q) {
  return is_valid_form(q) && form_rank(q) == q.rows();
}

bool operator==(const DelonePeriod& a, const DelonePeriod& b) {
  if (a.cells.size() != b.cells.size()) return false;
  for (size_t i = 0; i < a.cells.size(); ++i) {
    if (a.cells[i].size() != b.cells[i].size()) return false;
    for (size_t j = 0; j < a.cells[i].size(); ++j)
      if (a.cells[i][j] != b.cells[i][j]) return false;
  }
  return true;
}

DelonePeriod delone_subdivision(const QuadForm& q, int window) {
  const int g = static_cast<int>(q.rows());
  if (g < 1 || g > 3) throw std::invalid_argument("g <= 3 only");
  if (window < 2) throw std::invalid_argument("window >= 2 required");
  if (!is_valid_form(q)) throw std::invalid_argument("not positive semidefinite");
  if (form_rank(q) != g)
    throw std::invalid_argument("definite only -- reduce along nullspace first");

  // Lattice points of the window and their lift heights.
  std::vector<Eigen::VectorXi> points;
  std::vector<Rational> height;
  {
    Eigen::VectorXi x(g);
    std::vector<int> idx(g, -window);
    while (true) {
      for (int i = 0; i < g; ++i) x(i) = idx[i];
      points.push_back(x);
      height.push_back(evaluate(q, x));
      int i = g - 1;
      while (i >= 0 && idx[i] == window) { idx[i] = -window; --i; }
      if (i < 0) break;
      ++idx[i];
    }
  }
  const int npts = static_cast<int>(points.size());
  std::vector<int> nonzero;
  for (int i = 0; i < npts; ++i)
    if (!points[i].isZero()) nonzero.push_back(i);

  // Clear denominators: heights scaled by the lcm are integers, so the
  // whole hull search runs in integer arithmetic (still exact).
  std::int64_t denom = 1;
  for (const Rational& h : height) denom = std::lcm(denom, h.den());
  std::vector<std::int64_t> hh(npts);
  for (int i = 0; i < npts; ++i) hh[i] = height[i].num() * (denom / height[i].den());
  // Validate against the most binding (lowest) points first.
  std::vector<int> by_height(npts);
  std::iota(by_height.begin(), by_height.end(), 0);
  std::sort(by_height.begin(), by_height.end(),
            [&](int a, int b) { return hh[a] < hh[b]; });

  // Lower-hull facets through the lifted origin: hyperplanes z = a.x
  // spanned by g independent lattice points, kept when every window
  // point lies on or above them.
  std::set<std::vector<Rational>> seen;
  std::vector<std::vector<Eigen::VectorXi>> cells;
  std::vector<int> choice(g);
  std::function<void(int, int)> pick = [&](int pos, int start) {
    if (pos == g) {
      std::int64_t m[3][3] = {};
      for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) m[i][j] = points[choice[i]](j);
      std::int64_t det;
      std::int64_t adj[3][3] = {};  // adjugate, so adj * m = det * I
      if (g == 1) {
        det = m[0][0];
        adj[0][0] = 1;
      } else if (g == 2) {
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        adj[0][0] = m[1][1]; adj[0][1] = -m[0][1];
        adj[1][0] = -m[1][0]; adj[1][1] = m[0][0];
      } else {
        adj[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
        adj[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
        adj[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
        adj[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
        adj[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
        adj[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
        adj[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
        adj[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
        adj[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        det = m[0][0] * adj[0][0] + m[0][1] * adj[1][0] + m[0][2] * adj[2][0];
      }
      if (det == 0) return;
      // a = adj * rhs / det solves a . p_i = h_i.
      std::int64_t a_num[3] = {};
      for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) a_num[i] += adj[i][j] * hh[choice[j]];
      const std::int64_t sign = det > 0 ? 1 : -1;
      std::vector<int> face;
      for (int yi : by_height) {
        __int128 lift = 0;
        for (int j = 0; j < g; ++j)
          lift += static_cast<__int128>(a_num[j]) * points[yi](j);
        __int128 slack = (static_cast<__int128>(hh[yi]) * det - lift) * sign;
        if (slack < 0) return;  // not supporting
        if (slack == 0) face.push_back(yi);
      }
      std::vector<Rational> key;
      for (int j = 0; j < g; ++j) key.push_back(Rational(a_num[j], det));
      if (!seen.insert(key).second) return;
      std::sort(face.begin(), face.end());
      // Full-dimensional faces only.
      RationalMatrix span(face.size(), g);
      for (size_t i = 0; i < face.size(); ++i)
        for (int j = 0; j < g; ++j) span(static_cast<int>(i), j) = Rational(points[face[i]](j));
      if (form_rank(span) < g) return;
      std::vector<Eigen::VectorXi> verts;
      for (int i : face) {
        for (int j = 0; j < g; ++j)
          if (std::abs(points[i](j)) == window)
            throw std::invalid_argument("increase window");
        verts.push_back(points[i]);
      }
      std::sort(verts.begin(), verts.end(), lex_less);
      Eigen::VectorXi base = verts.front();
      for (auto& v : verts) v -= base;
      cells.push_back(std::move(verts));
      return;
    }
    for (int i = start; i < static_cast<int>(nonzero.size()); ++i) {
      choice[pos] = nonzero[i];
      pick(pos + 1, i + 1);
    }
  };
  pick(0, 0);

  std::sort(cells.begin(), cells.end(),
            [](const std::vector<Eigen::VectorXi>& a, const std::vector<Eigen::VectorXi>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              for (size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) return lex_less(a[i], b[i]);
              }
              return false;
            });
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return DelonePeriod{std::move(cells)};
}

namespace {

// Column operations on Q tracked in x (Q <- s^T Q s, x <- x * s).
void apply_swap(QuadForm& q, Eigen::MatrixXi& x) {
  std::swap(q(0, 0), q(1, 1));
  x.col(0).swap(x.col(1));
}

void apply_shear(QuadForm& q, Eigen::MatrixXi& x, std::int64_t k) {
  // (e0, e1) -> (e0, e1 - k e0)
  Rational rk{k};
  Rational a = q(0, 0), b = q(0, 1), c = q(1, 1);
  q(0, 1) = q(1, 0) = b - rk * a;
  q(1, 1) = c - Rational(2) * rk * b + rk * rk * a;
  x.col(1) -= static_cast<int>(k) * x.col(0);
}

void apply_negate(QuadForm& q, Eigen::MatrixXi& x) {
  q(0, 1) = -q(0, 1);
  q(1, 0) = -q(1, 0);
  x.col(1) *= -1;
}

std::int64_t nearest_int(const Rational& r) {
  // floor(r + 1/2)
  Rational s = r + Rational(1, 2);
  std::int64_t fl = s.num() >= 0 ? s.num() / s.den()
                                 : -((-s.num() + s.den() - 1) / s.den());
  return fl;
}

}  // namespace

G2Result classify_g2(const QuadForm& q_in) {
  if (q_in.rows() != 2 || q_in.cols() != 2) throw std::invalid_argument("g != 2");
  if (!is_valid_form(q_in)) throw std::invalid_argument("not positive semidefinite");
  const int rank = form_rank(q_in);
  G2Result out;
  out.transform = Eigen::MatrixXi::Identity(2, 2);
  if (rank == 0) {
    out.cls = G2Class::D4_point;
    out.reduced = q_in;
    return out;
  }
  if (rank == 1) {
    // Q = lambda v v^T with v primitive; reduce to [[lambda, 0], [0, 0]].
    RationalVector row(2);
    if (!q_in(0, 0).is_zero()) { row(0) = q_in(0, 0); row(1) = q_in(0, 1); }
    else { row(0) = q_in(1, 0); row(1) = q_in(1, 1); }
    std::int64_t lcm = row(0).den() / std::gcd(row(0).den(), row(1).den()) * row(1).den();
    std::int64_t v0 = row(0).num() * (lcm / row(0).den());
    std::int64_t v1 = row(1).num() * (lcm / row(1).den());
    std::int64_t content = std::gcd(v0 < 0 ? -v0 : v0, v1 < 0 ? -v1 : v1);
    v0 /= content;
    v1 /= content;
    // Extended gcd: alpha v0 + beta v1 = 1.
    std::int64_t alpha = 0, beta = 0;
    {
      std::int64_t old_r = v0, r = v1, old_s = 1, s = 0, old_t = 0, t = 1;
      while (r != 0) {
        std::int64_t quot = old_r / r;
        std::int64_t tmp;
        tmp = old_r - quot * r; old_r = r; r = tmp;
        tmp = old_s - quot * s; old_s = s; s = tmp;
        tmp = old_t - quot * t; old_t = t; t = tmp;
      }
      if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
      alpha = old_s;
      beta = old_t;
    }
    Eigen::MatrixXi x(2, 2);
    x << static_cast<int>(alpha), static_cast<int>(-v1),
         static_cast<int>(beta), static_cast<int>(v0);
    Rational vi = v0 != 0 ? Rational(v0) : Rational(v1);
    Rational diag = v0 != 0 ? q_in(0, 0) : q_in(1, 1);
    Rational lambda = diag / (vi * vi);
    out.cls = G2Class::D3_segment;
    out.reduced = QuadForm::Constant(2, 2, Rational(0));
    out.reduced(0, 0) = lambda;
    out.transform = x;
    return out;
  }

  // Definite: Lagrange-Gauss into b <= 0, -2b <= a <= c.
  QuadForm q = q_in;
  Eigen::MatrixXi x = Eigen::MatrixXi::Identity(2, 2);
  while (true) {
    if (q(0, 0) > q(1, 1)) apply_swap(q, x);
    std::int64_t k = nearest_int(q(0, 1) / q(0, 0));
    if (k != 0) {
      apply_shear(q, x, k);
      continue;
    }
    if (q(0, 0) <= q(1, 1)) break;
  }
  if (q(0, 1).sign() > 0) apply_negate(q, x);
  // Tie on the boundary 2|b| = a: prefer b <= 0, already enforced.
  out.cls = q(0, 1).is_zero() ? G2Class::D2_square : G2Class::D1_triangulated;
  out.reduced = q;
  out.transform = x;
  return out;
}

bool g2_equivalent(const QuadForm& a, const QuadForm& b) {
  return classify_g2(a).reduced == classify_g2(b).reduced;
}

std::optional<std::vector<Rational>> cone_membership(const QuadForm& q,
                                                     const ZonotopalCone& cone) {
  require_symmetric(q);
  const int g = static_cast<int>(q.rows());
  const int n = static_cast<int>(cone.rays.size());
  RationalMatrix m(g * g, n);
  RationalVector rhs(g * g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      rhs(i * g + j) = q(i, j);
      for (int k = 0; k < n; ++k) m(i * g + j, k) = Rational(cone.rays[k](i, j));
    }
  RationalVector c;
  switch (solve_linear(std::move(m), std::move(rhs), &c)) {
    case SolveStatus::kUnderdetermined:
      throw std::invalid_argument("not a simplicial cone");
    case SolveStatus::kInconsistent:
      return std::nullopt;
    case SolveStatus::kUnique:
      break;
  }
  std::vector<Rational> coeffs(c.data(), c.data() + n);
  for (const Rational& v : coeffs)
    if (v.sign() < 0) return std::nullopt;
  return coeffs;
}

std::string delone_to_json(const DelonePeriod& d) {
  std::ostringstream os;
  os << "{\"cells\":[";
  for (size_t i = 0; i < d.cells.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (size_t j = 0; j < d.cells[i].size(); ++j) {
      os << (j ? "," : "") << "[";
      for (int k = 0; k < d.cells[i][j].size(); ++k)
        os << (k ? "," : "") << d.cells[i][j](k);
      os << "]";
    }
    os << "]";
  }
  os << "]}";
  return os.str();
}

}  // namespace tropmod
