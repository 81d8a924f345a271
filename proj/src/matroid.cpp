#include "tropmod/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tropmod {

namespace {

int gf2_rank(std::vector<ElementSet> rows) {
  int r = 0;
  for (int bit = 0; bit < 32; ++bit) {
    ElementSet mask = ElementSet{1} << bit;
    int pivot = -1;
    for (size_t i = r; i < rows.size(); ++i)
      if (rows[i] & mask) { pivot = static_cast<int>(i); break; }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    for (size_t i = 0; i < rows.size(); ++i)
      if (static_cast<int>(i) != r && (rows[i] & mask)) rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

// Keeps only inclusion-minimal sets.
std::vector<ElementSet> minimal_sets(std::vector<ElementSet> sets) {
  std::sort(sets.begin(), sets.end(), [](ElementSet a, ElementSet b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<ElementSet> out;
  for (ElementSet s : sets) {
    bool dominated = false;
    for (ElementSet t : out)
      if ((t & s) == t) { dominated = true; break; }
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

BinaryMatroid BinaryMatroid::from_binary_rep(int ground_size,
                                             std::vector<ElementSet> rep_rows) {
  BinaryMatroid m;
  m.n_ = ground_size;
  m.rep_rows_ = std::move(rep_rows);
  m.rank_ = gf2_rank(m.rep_rows_);
  m.compute_circuits_from_rep();
  return m;
}

BinaryMatroid BinaryMatroid::from_circuits(int ground_size, int rank,
                                           std::vector<ElementSet> circuits) {
  BinaryMatroid m;
  m.n_ = ground_size;
  m.rank_ = rank;
  m.circuits_ = minimal_sets(std::move(circuits));
  return m;
}

void BinaryMatroid::compute_circuits_from_rep() {
  // Null space of the representation over GF(2); circuits are the
  // minimal nonzero supports.
  const int n = n_;
  std::vector<ElementSet> rows = rep_rows_;
  // Row-reduce and record pivot columns.
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < n; ++col) {
    ElementSet mask = ElementSet{1} << col;
    int pivot = -1;
    for (size_t i = r; i < rows.size(); ++i)
      if (rows[i] & mask) { pivot = static_cast<int>(i); break; }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    for (size_t i = 0; i < rows.size(); ++i)
      if (static_cast<int>(i) != r && (rows[i] & mask)) rows[i] ^= rows[r];
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<char> is_pivot(n, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  // Null space basis: one vector per free column.
  std::vector<ElementSet> basis;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    ElementSet v = ElementSet{1} << col;
    for (int i = 0; i < r; ++i)
      if (rows[i] & (ElementSet{1} << col)) v |= ElementSet{1} << pivot_col[i];
    basis.push_back(v);
  }
  if (basis.size() > 20) throw std::invalid_argument("corank too large for circuit enumeration");
  std::vector<ElementSet> supports;
  for (ElementSet combo = 1; combo < (ElementSet{1} << basis.size()); ++combo) {
    ElementSet v = 0;
    for (size_t i = 0; i < basis.size(); ++i)
      if (combo & (ElementSet{1} << i)) v ^= basis[i];
    if (v) supports.push_back(v);
  }
  circuits_ = minimal_sets(std::move(supports));
}

bool BinaryMatroid::is_simple() const {
  for (ElementSet c : circuits_)
    if (std::popcount(c) <= 2) return false;
  return true;
}

bool BinaryMatroid::is_circuit(ElementSet s) const {
  return std::binary_search(circuits_.begin(), circuits_.end(), s);
}

BinaryMatroid BinaryMatroid::deleted(ElementSet drop) const {
  std::vector<int> keep;
  for (int i = 0; i < n_; ++i)
    if (!(drop & (ElementSet{1} << i))) keep.push_back(i);
  const int nn = static_cast<int>(keep.size());
  if (has_binary_rep()) {
    std::vector<ElementSet> rows(rep_rows_.size(), 0);
    for (size_t i = 0; i < rep_rows_.size(); ++i)
      for (int j = 0; j < nn; ++j)
        if (rep_rows_[i] & (ElementSet{1} << keep[j])) rows[i] |= ElementSet{1} << j;
    return from_binary_rep(nn, std::move(rows));
  }
  // Circuit-backed: surviving circuits, relabeled.
  std::vector<ElementSet> cs;
  for (ElementSet c : circuits_) {
    if (c & drop) continue;
    ElementSet relabeled = 0;
    for (int j = 0; j < nn; ++j)
      if (c & (ElementSet{1} << keep[j])) relabeled |= ElementSet{1} << j;
    cs.push_back(relabeled);
  }
  // Rank by greedy independence (a set is independent iff it contains
  // no circuit).
  int rank = 0;
  ElementSet indep = 0;
  for (int j = 0; j < nn; ++j) {
    ElementSet cand = indep | (ElementSet{1} << j);
    bool dependent = false;
    for (ElementSet c : cs)
      if ((c & cand) == c) { dependent = true; break; }
    if (!dependent) { indep = cand; ++rank; }
  }
  return from_circuits(nn, rank, std::move(cs));
}

std::string BinaryMatroid::to_json() const {
  std::ostringstream os;
  os << "{\"n\":" << n_ << ",\"rank\":" << rank_ << ",\"rep_rows\":[";
  for (size_t i = 0; i < rep_rows_.size(); ++i) {
    os << (i ? "," : "") << "\"";
    for (int j = 0; j < n_; ++j) os << ((rep_rows_[i] >> j) & 1);
    os << "\"";
  }
  os << "],\"circuits\":[";
  for (size_t i = 0; i < circuits_.size(); ++i) {
    os << (i ? "," : "") << "[";
    bool first = true;
    for (int j = 0; j < n_; ++j)
      if (circuits_[i] & (ElementSet{1} << j)) {
        os << (first ? "" : ",") << j;
        first = false;
      }
    os << "]";
  }
  os << "]}";
  return os.str();
}

bool is_totally_unimodular(const Eigen::MatrixXi& a) {
  const int r = static_cast<int>(a.rows());
  const int c = static_cast<int>(a.cols());
  if (r > 8 || c > 14) throw std::invalid_argument("use structural check");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (a(i, j) < -1 || a(i, j) > 1) return false;
  const int k_max = std::min(r, c);
  // All k x k minors via subset enumeration; integer determinants are
  // exact in 64 bits at these sizes.
  auto det = [&](const std::vector<int>& rs, const std::vector<int>& cs) -> long long {
    const int k = static_cast<int>(rs.size());
    // Fraction-free (Bareiss) elimination.
    std::vector<std::vector<long long>> m(k, std::vector<long long>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m[i][j] = a(rs[i], cs[j]);
    long long prev = 1;
    int sign = 1;
    for (int p = 0; p < k - 1; ++p) {
      if (m[p][p] == 0) {
        int swap_row = -1;
        for (int i = p + 1; i < k; ++i)
          if (m[i][p] != 0) { swap_row = i; break; }
        if (swap_row < 0) return 0;
        std::swap(m[p], m[swap_row]);
        sign = -sign;
      }
      for (int i = p + 1; i < k; ++i)
        for (int j = p + 1; j < k; ++j)
          m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
      prev = m[p][p];
    }
    return sign * m[k - 1][k - 1];
  };
  for (int k = 1; k <= k_max; ++k) {
    std::vector<int> rs(k), cs(k);
    std::iota(rs.begin(), rs.end(), 0);
    while (true) {
      std::iota(cs.begin(), cs.end(), 0);
      while (true) {
        long long d = det(rs, cs);
        if (d < -1 || d > 1) return false;
        int i = k - 1;
        while (i >= 0 && cs[i] == c - k + i) --i;
        if (i < 0) break;
        ++cs[i];
        for (int j = i + 1; j < k; ++j) cs[j] = cs[j - 1] + 1;
      }
      int i = k - 1;
      while (i >= 0 && rs[i] == r - k + i) --i;
      if (i < 0) break;
      ++rs[i];
      for (int j = i + 1; j < k; ++j) rs[j] = rs[j - 1] + 1;
    }
  }
  return true;
}

namespace {

struct SpanningTree {
  std::vector<int> parent_vertex;
  std::vector<int> parent_edge;
  std::vector<int> depth;
  std::vector<char> in_tree;  // per edge
};

// BFS tree from vertex 0, preferring lower edge indices.
SpanningTree spanning_tree(const WeightedGraph& g) {
  const int n = g.num_vertices();
  SpanningTree t;
  t.parent_vertex.assign(n, -1);
  t.parent_edge.assign(n, -1);
  t.depth.assign(n, 0);
  t.in_tree.assign(g.num_edges(), 0);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  std::vector<int> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int e = 0; e < g.num_edges(); ++e) {
      const Edge& edge = g.edges()[e];
      if (edge.is_loop()) continue;
      int other = -1;
      if (edge.u == v) other = edge.v;
      else if (edge.v == v) other = edge.u;
      else continue;
      if (seen[other]) continue;
      seen[other] = 1;
      t.parent_vertex[other] = v;
      t.parent_edge[other] = e;
      t.depth[other] = t.depth[v] + 1;
      t.in_tree[e] = 1;
      queue.push_back(other);
    }
  }
  return t;
}

// Orientation convention: copies of a parallel class alternate
// direction, even copies lower -> higher vertex. Returns (tail, head).
std::pair<int, int> orientation(const WeightedGraph& g, int e) {
  const Edge& edge = g.edges()[e];
  if (edge.is_loop()) return {edge.u, edge.u};
  int pos = 0;
  for (int i = 0; i < e; ++i)
    if (g.edges()[i] == edge) ++pos;
  return (pos % 2 == 0) ? std::make_pair(edge.u, edge.v)
                        : std::make_pair(edge.v, edge.u);
}

}  // namespace

TUMatrix tu_representation_cographic(const WeightedGraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("not connected");
  const int m = g.num_edges();
  SpanningTree tree = spanning_tree(g);
  std::vector<int> nontree;
  for (int e = 0; e < m; ++e)
    if (!tree.in_tree[e]) nontree.push_back(e);
  TUMatrix b = TUMatrix::Zero(static_cast<int>(nontree.size()), m);
  for (size_t row = 0; row < nontree.size(); ++row) {
    int f = nontree[row];
    auto [tail, head] = orientation(g, f);
    b(static_cast<int>(row), f) = 1;
    // Walk the tree path from head back to tail.
    int x = head, y = tail;
    while (x != y) {
      int* walk = tree.depth[x] >= tree.depth[y] ? &x : &y;
      int step = tree.depth[x] >= tree.depth[y] ? 1 : -1;
      int e = tree.parent_edge[*walk];
      auto [et, eh] = orientation(g, e);
      // Moving from *walk toward its parent; +1 when that traversal
      // follows the edge orientation (for the head-to-tail direction).
      int from = *walk;
      int to = tree.parent_vertex[*walk];
      int coeff = (from == et && to == eh) ? 1 : -1;
      b(static_cast<int>(row), e) += step * coeff;
      *walk = to;
    }
  }
  return b;
}

BinaryMatroid cographic_matroid(const WeightedGraph& g) {
  TUMatrix b = tu_representation_cographic(g);
  return column_matroid_mod2(b);
}

BinaryMatroid column_matroid_mod2(const Eigen::MatrixXi& a) {
  std::vector<ElementSet> rows(a.rows(), 0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (((a(i, j) % 2) + 2) % 2 == 1) rows[i] |= ElementSet{1} << j;
  return BinaryMatroid::from_binary_rep(static_cast<int>(a.cols()), std::move(rows));
}

SimplifyResult simplify(const BinaryMatroid& m) {
  const int n = m.ground_size();
  std::vector<int> map(n, kDeleted);
  ElementSet drop = 0;
  std::vector<int> parallel_rep(n, -1);
  for (int i = 0; i < n; ++i) parallel_rep[i] = i;
  for (ElementSet c : m.circuits()) {
    int size = std::popcount(c);
    if (size == 1) {
      drop |= c;
    } else if (size == 2) {
      int lo = std::countr_zero(c);
      int hi = 31 - std::countl_zero(c);
      parallel_rep[hi] = std::min(parallel_rep[hi], parallel_rep[lo]);
    }
  }
  // Resolve parallel chains to the lowest-index representative.
  for (int i = 0; i < n; ++i) {
    int r = i;
    while (parallel_rep[r] != r) r = parallel_rep[r];
    parallel_rep[i] = r;
    if (r != i) drop |= ElementSet{1} << i;
  }
  BinaryMatroid simple = m.deleted(drop);
  std::vector<int> new_index(n, kDeleted);
  int next = 0;
  for (int i = 0; i < n; ++i)
    if (!(drop & (ElementSet{1} << i))) new_index[i] = next++;
  for (int i = 0; i < n; ++i) {
    if (drop & (ElementSet{1} << i)) {
      int r = parallel_rep[i];
      map[i] = (r != i && new_index[r] != kDeleted) ? new_index[r] : kDeleted;
    } else {
      map[i] = new_index[i];
    }
  }
  return SimplifyResult{std::move(simple), std::move(map)};
}

namespace {

// Count of circuits of each size through each element; isomorphisms
// must preserve these profiles.
std::vector<std::vector<int>> element_profiles(const BinaryMatroid& m) {
  std::vector<std::vector<int>> prof(m.ground_size(),
                                     std::vector<int>(m.ground_size() + 1, 0));
  for (ElementSet c : m.circuits()) {
    int size = std::popcount(c);
    for (int i = 0; i < m.ground_size(); ++i)
      if (c & (ElementSet{1} << i)) ++prof[i][size];
  }
  return prof;
}

struct IsoSearch {
  const BinaryMatroid& m;
  const BinaryMatroid& n;
  std::vector<std::vector<ElementSet>> circuits_by_max;  // circuits of m by max element
  std::vector<std::vector<int>> prof_m, prof_n;
  std::vector<int> pi;
  std::vector<char> used;
  bool count_all = false;
  std::uint64_t leaves = 0;
  std::optional<std::vector<int>> first;

  IsoSearch(const BinaryMatroid& a, const BinaryMatroid& b) : m(a), n(b) {
    circuits_by_max.resize(m.ground_size());
    for (ElementSet c : m.circuits()) {
      int max_el = 31 - std::countl_zero(c);
      circuits_by_max[max_el].push_back(c);
    }
    prof_m = element_profiles(m);
    prof_n = element_profiles(n);
    pi.assign(m.ground_size(), -1);
    used.assign(m.ground_size(), 0);
  }

  bool descend(int k) {
    if (k == m.ground_size()) {
      ++leaves;
      if (!first) first = pi;
      return !count_all;  // stop at the first (lex-least) hit unless counting
    }
    for (int cand = 0; cand < n.ground_size(); ++cand) {
      if (used[cand] || prof_m[k] != prof_n[cand]) continue;
      pi[k] = cand;
      bool ok = true;
      for (ElementSet c : circuits_by_max[k]) {
        ElementSet image = 0;
        for (int i = 0; i <= k; ++i)
          if (c & (ElementSet{1} << i)) image |= ElementSet{1} << pi[i];
        if (!n.is_circuit(image)) { ok = false; break; }
      }
      if (ok) {
        used[cand] = 1;
        if (descend(k + 1)) return true;
        used[cand] = 0;
      }
      pi[k] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic_matroid(const BinaryMatroid& m,
                                                      const BinaryMatroid& n) {
  if (m.ground_size() > 12 || n.ground_size() > 12)
    throw std::invalid_argument("ground set too large");
  if (m.ground_size() != n.ground_size() || m.rank() != n.rank()) return std::nullopt;
  if (m.circuits().size() != n.circuits().size()) return std::nullopt;
  IsoSearch search(m, n);
  search.descend(0);
  return search.first;
}

std::uint64_t automorphism_group_order(const BinaryMatroid& m) {
  if (m.ground_size() > 12) throw std::invalid_argument("ground set too large");
  IsoSearch search(m, m);
  search.count_all = true;
  search.descend(0);
  return search.leaves;
}

namespace {

// Unimodular row reduction bringing the columns `basis` of `a` to
// [I_r; 0]. Returns the transform U with U * a in that form.
Eigen::MatrixXi reduce_to_identity(const Eigen::MatrixXi& a, const std::vector<int>& basis) {
  const int g = static_cast<int>(a.rows());
  Eigen::MatrixXi work = a;
  Eigen::MatrixXi u = Eigen::MatrixXi::Identity(g, g);
  int r = 0;
  for (int col : basis) {
    int pivot = -1;
    for (int i = r; i < g; ++i)
      if (work(i, col) == 1 || work(i, col) == -1) { pivot = i; break; }
    if (pivot < 0) throw std::logic_error("TU pivot missing");
    if (pivot != r) {
      work.row(pivot).swap(work.row(r));
      u.row(pivot).swap(u.row(r));
    }
    if (work(r, col) == -1) {
      work.row(r) *= -1;
      u.row(r) *= -1;
    }
    for (int i = 0; i < g; ++i) {
      if (i == r) continue;
      int factor = work(i, col);
      if (factor != 0) {
        work.row(i) -= factor * work.row(r);
        u.row(i) -= factor * u.row(r);
      }
    }
    ++r;
  }
  return u;
}

// Exact inverse of a unimodular integer matrix via the adjugate.
Eigen::MatrixXi unimodular_inverse(const Eigen::MatrixXi& a) {
  const int g = static_cast<int>(a.rows());
  auto minor_det = [&](const Eigen::MatrixXi& m, int skip_row, int skip_col) {
    std::vector<std::vector<long long>> sub;
    for (int i = 0; i < g; ++i) {
      if (i == skip_row) continue;
      std::vector<long long> row;
      for (int j = 0; j < g; ++j)
        if (j != skip_col) row.push_back(m(i, j));
      sub.push_back(std::move(row));
    }
    const int k = static_cast<int>(sub.size());
    if (k == 0) return 1LL;
    long long prev = 1;
    int sign = 1;
    for (int p = 0; p < k - 1; ++p) {
      if (sub[p][p] == 0) {
        int sr = -1;
        for (int i = p + 1; i < k; ++i)
          if (sub[i][p] != 0) { sr = i; break; }
        if (sr < 0) return 0LL;
        std::swap(sub[p], sub[sr]);
        sign = -sign;
      }
      for (int i = p + 1; i < k; ++i)
        for (int j = p + 1; j < k; ++j)
          sub[i][j] = (sub[i][j] * sub[p][p] - sub[i][p] * sub[p][j]) / prev;
      prev = sub[p][p];
    }
    return static_cast<long long>(sign) * sub[k - 1][k - 1];
  };
  long long det = 0;
  for (int j = 0; j < g; ++j) {
    long long c = minor_det(a, 0, j);
    det += ((j % 2 == 0) ? 1 : -1) * a(0, j) * c;
  }
  if (det != 1 && det != -1) throw std::logic_error("matrix is not unimodular");
  Eigen::MatrixXi inv(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      long long c = minor_det(a, j, i);
      long long sgn = ((i + j) % 2 == 0) ? 1 : -1;
      inv(i, j) = static_cast<int>(sgn * c * det);
    }
  return inv;
}

// Greedy lex-first column basis over GF(2).
std::vector<int> greedy_basis(const BinaryMatroid& m) {
  std::vector<int> basis;
  std::vector<ElementSet> picked;
  for (int j = 0; j < m.ground_size() && static_cast<int>(basis.size()) < m.rank(); ++j) {
    std::vector<int> cand = basis;
    cand.push_back(j);
    // Independent iff no circuit inside.
    ElementSet s = 0;
    for (int e : cand) s |= ElementSet{1} << e;
    bool dependent = false;
    for (ElementSet c : m.circuits())
      if ((c & s) == c) { dependent = true; break; }
    if (!dependent) basis.push_back(j);
  }
  return basis;
}

}  // namespace

Eigen::MatrixXi realize_matroid_iso(const TUMatrix& a, const TUMatrix& b,
                                    const std::vector<int>& pi) {
  if (a.rows() != b.rows()) throw std::invalid_argument("rank mismatch");
  if (a.cols() != b.cols() || static_cast<int>(pi.size()) != a.cols())
    throw std::invalid_argument("column count mismatch");
  const int g = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());

  BinaryMatroid ma = column_matroid_mod2(a);
  BinaryMatroid mb = column_matroid_mod2(b);
  if (ma.rank() != mb.rank()) throw std::invalid_argument("rank mismatch");
  // Verify pi carries circuits onto circuits.
  {
    if (ma.circuits().size() != mb.circuits().size())
      throw std::invalid_argument("not an isomorphism");
    for (ElementSet c : ma.circuits()) {
      ElementSet image = 0;
      for (int i = 0; i < n; ++i)
        if (c & (ElementSet{1} << i)) image |= ElementSet{1} << pi[i];
      if (!mb.is_circuit(image)) throw std::invalid_argument("not an isomorphism");
    }
  }

  Eigen::MatrixXi b_perm(g, n);
  for (int i = 0; i < n; ++i) b_perm.col(i) = b.col(pi[i]);

  std::vector<int> basis = greedy_basis(ma);
  Eigen::MatrixXi u = reduce_to_identity(a, basis);
  Eigen::MatrixXi v = reduce_to_identity(b_perm, basis);
  Eigen::MatrixXi a1 = u * a;
  Eigen::MatrixXi b1 = v * b_perm;

  const int r = static_cast<int>(basis.size());
  // Sign matching (rows and columns can be negated): propagate sign
  // constraints row_sign[i] * col_sign[j] = a1(i,j) * b1(i,j).
  std::vector<int> row_sign(r, 0), col_sign(n, 0);
  for (int start = 0; start < r; ++start) {
    if (row_sign[start] != 0) continue;
    row_sign[start] = 1;
    std::vector<std::pair<bool, int>> queue{{true, start}};  // (is_row, index)
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      auto [is_row, idx] = queue[qi];
      if (is_row) {
        for (int j = 0; j < n; ++j) {
          if (a1(idx, j) == 0 && b1(idx, j) == 0) continue;
          if (a1(idx, j) == 0 || b1(idx, j) == 0)
            throw std::invalid_argument("not an isomorphism");
          int rel = a1(idx, j) * b1(idx, j);
          int want = row_sign[idx] * rel;
          if (col_sign[j] == 0) {
            col_sign[j] = want;
            queue.emplace_back(false, j);
          } else if (col_sign[j] != want) {
            throw std::invalid_argument("not an isomorphism");
          }
        }
      } else {
        for (int i = 0; i < r; ++i) {
          if (a1(i, idx) == 0 && b1(i, idx) == 0) continue;
          if (a1(i, idx) == 0 || b1(i, idx) == 0)
            throw std::invalid_argument("not an isomorphism");
          int rel = a1(i, idx) * b1(i, idx);
          int want = col_sign[idx] * rel;
          if (row_sign[i] == 0) {
            row_sign[i] = want;
            queue.emplace_back(true, i);
          } else if (row_sign[i] != want) {
            throw std::invalid_argument("not an isomorphism");
          }
        }
      }
    }
  }

  Eigen::MatrixXi d = Eigen::MatrixXi::Identity(g, g);
  for (int i = 0; i < r; ++i) d(i, i) = row_sign[i] == 0 ? 1 : row_sign[i];
  return unimodular_inverse(v) * d * u;
}

ZonotopalCone zonotopal_cone(const TUMatrix& a) {
  ZonotopalCone cone;
  for (int j = 0; j < a.cols(); ++j) {
    Eigen::MatrixXi ray = a.col(j) * a.col(j).transpose();
    bool dup = false;
    for (const auto& existing : cone.rays)
      if (existing == ray) { dup = true; break; }
    if (!dup) cone.rays.push_back(std::move(ray));
  }
  return cone;
}

BinaryMatroid fano() {
  // Circuits {124,235,346,457,156,267,137}, stored 0-indexed as
  // {013,124,235,346,045,156,026}. Columns are the nonzero vectors of
  // GF(2)^3 in a matching order.
  std::vector<ElementSet> rows = {
      0b1101001,  // coordinate 1 in elements 0,3,5,6
      0b0111010,  // elements 1,3,4,5
      0b1110100,  // elements 2,4,5,6
  };
  return BinaryMatroid::from_binary_rep(7, std::move(rows));
}

TUMatrix mk4_matrix() {
  TUMatrix a(3, 6);
  a << 1, 0, 0, 1, 1, 0,
       0, 1, 0, -1, 0, 1,
       0, 0, 1, 0, -1, -1;
  return a;
}

TUMatrix u23_matrix() {
  TUMatrix a(2, 3);
  a << 1, 0, 1,
       0, 1, -1;
  return a;
}

BinaryMatroid mk4() { return column_matroid_mod2(mk4_matrix()); }

BinaryMatroid uniform(int d, int n) {
  if (d > n || d < 0 || n < 0) throw std::invalid_argument("bad uniform parameters");
  if (n > 20) throw std::invalid_argument("ground set too large");
  if (d == n) {
    std::vector<ElementSet> rows;
    for (int i = 0; i < n; ++i) rows.push_back(ElementSet{1} << i);
    return BinaryMatroid::from_binary_rep(n, std::move(rows));
  }
  if (d == 0) {
    return BinaryMatroid::from_binary_rep(n, {});
  }
  if (d == 1) {
    ElementSet all = (ElementSet{1} << n) - 1;
    return BinaryMatroid::from_binary_rep(n, {all});
  }
  if (d == n - 1) {
    std::vector<ElementSet> rows;
    for (int i = 0; i < d; ++i)
      rows.push_back((ElementSet{1} << i) | (ElementSet{1} << (n - 1)));
    return BinaryMatroid::from_binary_rep(n, std::move(rows));
  }
  // Not binary; fall back to the explicit circuit list (all (d+1)-subsets).
  std::vector<ElementSet> circuits;
  for (ElementSet s = 0; s < (ElementSet{1} << n); ++s)
    if (std::popcount(s) == d + 1) circuits.push_back(s);
  return BinaryMatroid::from_circuits(n, d, std::move(circuits));
}

}  // namespace tropmod
