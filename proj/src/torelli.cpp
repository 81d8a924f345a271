#include "tropmod/torelli.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tropmod/moduli_poset.hpp"

namespace tropmod {

namespace {

void require_valid_curve(const MetricCurve& c) {
  int g = genus(c.graph);
  if (!is_valid_type(c.graph, g)) throw std::invalid_argument("invalid curve type");
  if (static_cast<int>(c.lengths.size()) != c.graph.num_edges())
    throw std::invalid_argument("length count mismatch");
  for (const Rational& l : c.lengths)
    if (l.sign() <= 0) throw std::invalid_argument("lengths must be positive");
}

}  // namespace

QuadForm tropical_jacobian(const MetricCurve& c) {
  require_valid_curve(c);
  const int g = genus(c.graph);
  const int h = g - c.graph.total_weight();  // cycle rank
  QuadForm q = QuadForm::Constant(g, g, Rational(0));
  if (h == 0) return q;
  TUMatrix b = tu_representation_cographic(c.graph);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      Rational sum(0);
      for (int e = 0; e < c.graph.num_edges(); ++e)
        sum += Rational(b(i, e)) * c.lengths[e] * Rational(b(j, e));
      q(i, j) = sum;
    }
  return q;
}

BinaryMatroid torelli_cell_image(const WeightedGraph& g) {
  if (!is_valid_type(g, genus(g))) throw std::invalid_argument("invalid type");
  return simplify(cographic_matroid(g)).matroid;
}

std::vector<Rational> jacobian_in_cographic_cone(const MetricCurve& c) {
  require_valid_curve(c);
  const int g = genus(c.graph);
  const int h = g - c.graph.total_weight();
  if (h == 0) return {};
  TUMatrix b = tu_representation_cographic(c.graph);
  // Drop zero columns (bridges); they carry no ray.
  std::vector<int> live;
  for (int e = 0; e < b.cols(); ++e)
    if (!b.col(e).isZero()) live.push_back(e);
  TUMatrix bl(h, static_cast<int>(live.size()));
  for (size_t i = 0; i < live.size(); ++i) bl.col(static_cast<int>(i)) = b.col(live[i]);
  ZonotopalCone cone = zonotopal_cone(bl);
  QuadForm top(h, h);
  QuadForm full = tropical_jacobian(c);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) top(i, j) = full(i, j);
  auto coeffs = cone_membership(top, cone);
  if (!coeffs) throw std::logic_error("jacobian escaped the cographic cone");
  return *coeffs;
}

namespace {

// Cheap isomorphism invariant used to bucket matroids.
std::vector<int> matroid_invariant(const BinaryMatroid& m) {
  std::vector<int> inv{m.ground_size(), m.rank(),
                       static_cast<int>(m.circuits().size())};
  std::vector<int> sizes;
  for (ElementSet c : m.circuits()) sizes.push_back(std::popcount(c));
  std::sort(sizes.begin(), sizes.end());
  inv.insert(inv.end(), sizes.begin(), sizes.end());
  return inv;
}

}  // namespace

SchottkyPoset build_schottky_poset(int g) {
  if (g < 2 || g > 5) throw std::invalid_argument("genus out of range");
  CellPoset moduli = build_moduli_poset(g);

  // Harvest isomorphism classes of simple cographic matroids, bucketed
  // by a cheap invariant so the exact isomorphism search runs rarely.
  std::map<std::vector<int>, std::vector<BinaryMatroid>> classes;
  auto insert_class = [&](const BinaryMatroid& m) {
    auto& bucket = classes[matroid_invariant(m)];
    for (const BinaryMatroid& seen : bucket)
      if (is_isomorphic_matroid(seen, m)) return;
    bucket.push_back(m);
  };
  insert_class(BinaryMatroid::from_binary_rep(0, {}));
  for (const Cell& cell : moduli.cells) insert_class(torelli_cell_image(cell.graph));

  SchottkyPoset out;
  out.genus = g;
  for (auto& [inv, bucket] : classes)
    for (BinaryMatroid& m : bucket) {
      int rank = m.ground_size();
      out.cells.push_back(SchottkyCell{std::move(m), rank, 0});
    }
  std::sort(out.cells.begin(), out.cells.end(),
            [](const SchottkyCell& a, const SchottkyCell& b) {
              if (a.rank != b.rank) return a.rank < b.rank;
              return a.matroid.circuits() < b.matroid.circuits();
            });
  for (size_t i = 0; i < out.cells.size(); ++i)
    out.cells[i].id = static_cast<int>(i);

  // Covers: one-element deletions.
  std::set<std::pair<int, int>> covers;
  for (const SchottkyCell& cell : out.cells) {
    for (int e = 0; e < cell.matroid.ground_size(); ++e) {
      BinaryMatroid del = cell.matroid.deleted(ElementSet{1} << e);
      int lower = -1;
      for (const SchottkyCell& cand : out.cells) {
        if (cand.rank != cell.rank - 1) continue;
        if (is_isomorphic_matroid(cand.matroid, del)) { lower = cand.id; break; }
      }
      if (lower < 0) throw std::logic_error("deletion left the poset");
      covers.emplace(lower, cell.id);
    }
  }
  out.covers.assign(covers.begin(), covers.end());
  return out;
}

std::vector<int> schottky_f_vector(const SchottkyPoset& p) {
  int max_rank = 0;
  for (const SchottkyCell& c : p.cells) max_rank = std::max(max_rank, c.rank);
  std::vector<int> f(max_rank + 1, 0);
  for (const SchottkyCell& c : p.cells) ++f[c.rank];
  return f;
}

std::vector<SchottkyCell> schottky_maximal_cells(const SchottkyPoset& p) {
  std::vector<char> has_upper(p.cells.size(), 0);
  for (const auto& [lo, hi] : p.covers) has_upper[lo] = 1;
  std::vector<SchottkyCell> out;
  for (const SchottkyCell& c : p.cells)
    if (!has_upper[c.id]) out.push_back(c);
  return out;
}

std::string schottky_to_json(const SchottkyPoset& p) {
  std::ostringstream os;
  os << "{\"genus\":" << p.genus << ",\"fvector\":[";
  auto f = schottky_f_vector(p);
  for (size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << "],\"cells\":[";
  for (size_t i = 0; i < p.cells.size(); ++i) {
    os << (i ? "," : "") << "{\"id\":" << p.cells[i].id << ",\"rank\":"
       << p.cells[i].rank << ",\"matroid\":" << p.cells[i].matroid.to_json() << "}";
  }
  os << "],\"covers\":[";
  for (size_t i = 0; i < p.covers.size(); ++i)
    os << (i ? "," : "") << "[" << p.covers[i].first << "," << p.covers[i].second << "]";
  os << "]}";
  return os.str();
}

std::string schottky_to_dot(const SchottkyPoset& p) {
  std::ostringstream os;
  os << "digraph schottky_" << p.genus << " {\n  rankdir=BT;\n";
  for (const SchottkyCell& c : p.cells)
    os << "  c" << c.id << " [label=\"n=" << c.matroid.ground_size()
       << " r=" << c.matroid.rank() << "\"];\n";
  for (const auto& [lo, hi] : p.covers)
    os << "  c" << lo << " -> c" << hi << ";\n";
  os << "}\n";
  return os.str();
}

std::string reproduce_tables() {
  std::ostringstream os;
  const int literature_max[4] = {1, 1, 3, 222};
  const long long literature_total[4] = {4, 9, 61, 179433};
  os << "g | M_g maximal | M_g total | A_g^cogr maximal | A_g^cogr total | "
        "A_g^tr maximal (reference, not computed) | A_g^tr total (reference, not computed)\n";
  for (int g = 2; g <= 5; ++g) {
    CellPoset m = build_moduli_poset(g);
    SchottkyPoset a = build_schottky_poset(g);
    size_t m_max = maximal_cells(m).size();
    size_t a_max = schottky_maximal_cells(a).size();
    os << g << " | " << m_max << " | " << m.cells.size() << " | " << a_max
       << " | " << a.cells.size() << " | " << literature_max[g - 2] << " | "
       << literature_total[g - 2] << "\n";
    // A_g^cogr = A_g^tr for g <= 3.
    if (g <= 3 &&
        (static_cast<long long>(a.cells.size()) != literature_total[g - 2] ||
         static_cast<long long>(a_max) != literature_max[g - 2]))
      throw std::logic_error("cographic/tropical table mismatch for g <= 3");
  }
  return os.str();
}

}  // namespace tropmod
