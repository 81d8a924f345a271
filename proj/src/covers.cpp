#include "tropmod/covers.hpp"

#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tropmod {

FPFan build_fp(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  FPFan fan;
  fan.n = n;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXi e = Eigen::VectorXi::Zero(n);
    e(i) = 1;
    fan.rays.push_back(e);
  }
  Eigen::VectorXi last = Eigen::VectorXi::Constant(n, -1);
  fan.rays.push_back(last);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n + 1)); ++mask) {
    if (std::popcount(mask) > n) continue;  // the full set is not a cone
    std::vector<int> cone;
    for (int i = 0; i <= n; ++i)
      if ((mask >> i) & 1) cone.push_back(i);
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

namespace {

// Builds and exhaustively verifies a cover glued from the one-element
// deletions of `source`, all isomorphic to `target`.
CoverMap build_cover(const BinaryMatroid& source, const BinaryMatroid& target,
                     const TUMatrix& target_matrix) {
  const int n1 = source.ground_size();  // number of rays / maximal cones
  const int tn = target.ground_size();
  const ElementSet source_all = (ElementSet{1} << n1) - 1;
  const ElementSet target_all = (ElementSet{1} << tn) - 1;

  std::vector<std::vector<int>> pi(n1);
  for (int i = 0; i < n1; ++i) {
    auto iso = is_isomorphic_matroid(source.deleted(ElementSet{1} << i), target);
    if (!iso) throw std::logic_error("deletion not isomorphic to target");
    pi[i] = *iso;
  }
  // pi_i-hat evaluated at ground element k != i.
  auto pi_at = [&](int i, int k) { return pi[i][k - (k > i ? 1 : 0)]; };

  const int g = static_cast<int>(target_matrix.rows());
  std::vector<OverlapWitness> log;
  for (int i = 0; i < n1; ++i)
    for (int j = i + 1; j < n1; ++j) {
      std::vector<int> rest;
      for (int k = 0; k < n1; ++k)
        if (k != i && k != j) rest.push_back(k);
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << rest.size()); ++mask) {
        ElementSet s = 0;
        std::vector<int> members;
        for (size_t t = 0; t < rest.size(); ++t)
          if ((mask >> t) & 1) {
            s |= ElementSet{1} << rest[t];
            members.push_back(rest[t]);
          }
        // On cone(S) the two charts see the columns pi_i-hat(S) and
        // pi_j-hat(S); realize the identity column correspondence.
        Eigen::MatrixXi x;
        if (members.empty()) {
          x = Eigen::MatrixXi::Identity(g, g);
        } else {
          const int m = static_cast<int>(members.size());
          TUMatrix cols_i(g, m), cols_j(g, m);
          for (int t = 0; t < m; ++t) {
            cols_i.col(t) = target_matrix.col(pi_at(i, members[t]));
            cols_j.col(t) = target_matrix.col(pi_at(j, members[t]));
          }
          std::vector<int> identity(m);
          for (int t = 0; t < m; ++t) identity[t] = t;
          try {
            x = realize_matroid_iso(cols_i, cols_j, identity);
          } catch (const std::exception& e) {
            std::ostringstream os;
            os << "overlap failed at (" << i << "," << j << "," << s
               << "): " << e.what();
            throw std::logic_error(os.str());
          }
        }
        for (int k : members) {
          Eigen::VectorXi lhs = x * target_matrix.col(pi_at(i, k));
          if (lhs != target_matrix.col(pi_at(j, k)) &&
              lhs != (-target_matrix.col(pi_at(j, k))).eval()) {
            std::ostringstream os;
            os << "overlap witness failed at (" << i << "," << j << "," << s << ")";
            throw std::logic_error(os.str());
          }
        }
        log.push_back({i, j, s, x});
      }
    }

  // Cell-image consistency: every chart containing cone(S) assigns the
  // same submatroid class, namely that of the source restriction to S.
  for (ElementSet s = 0; s < source_all; ++s) {
    BinaryMatroid cell = source.deleted(source_all & ~s);
    for (int i = 0; i < n1; ++i) {
      if ((s >> i) & 1) continue;
      ElementSet image = 0;
      for (int k = 0; k < n1; ++k)
        if ((s >> k) & 1) image |= ElementSet{1} << pi_at(i, k);
      if (!is_isomorphic_matroid(target.deleted(target_all & ~image), cell))
        throw std::logic_error("inconsistent cell image");
    }
  }

  // Surjectivity: every simple submatroid of the target shows up as a
  // proper restriction of the source (pull back through chart 0).
  for (ElementSet t = 0; t <= target_all; ++t) {
    BinaryMatroid sub = target.deleted(target_all & ~t);
    if (!sub.is_simple()) continue;
    ElementSet s = 0;
    for (int k = 1; k < n1; ++k)
      if ((t >> pi_at(0, k)) & 1) s |= ElementSet{1} << k;
    if (!is_isomorphic_matroid(source.deleted(source_all & ~s), sub))
      throw std::logic_error("submatroid not covered");
  }

  return CoverMap{build_fp(n1 - 1), source, target, target_matrix,
                  std::move(pi), std::move(log)};
}

}  // namespace

CoverMap build_cover_a3() {
  return build_cover(fano(), mk4(), mk4_matrix());
}

CoverMap build_cover_a2() {
  return build_cover(uniform(2, 4), column_matroid_mod2(u23_matrix()), u23_matrix());
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

long long modp_ray_classes(int g, int p) {
  if (g < 1) throw std::invalid_argument("g must be positive");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  long long total = 1;
  for (int i = 0; i < g; ++i) {
    total *= p;
    if (total > (1LL << 24)) throw std::invalid_argument("p^g too large");
  }
  // Orbits of (Z/p)^g minus the origin under v -> -v, by enumeration.
  std::set<long long> seen;
  long long classes = 0;
  for (long long v = 1; v < total; ++v) {
    if (seen.count(v)) continue;
    long long neg = 0, stride = 1, rem = v;
    for (int i = 0; i < g; ++i) {
      long long digit = rem % p;
      rem /= p;
      neg += ((p - digit) % p) * stride;
      stride *= p;
    }
    seen.insert(v);
    seen.insert(neg);
    ++classes;
  }
  return classes;
}

std::string cover_to_json(const CoverMap& c) {
  std::ostringstream os;
  os << "{\"n\":" << c.fan.n << ",\"source\":" << c.source.to_json()
     << ",\"target\":" << c.target.to_json() << ",\"assignments\":[";
  for (size_t i = 0; i < c.assignments.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (size_t t = 0; t < c.assignments[i].size(); ++t)
      os << (t ? "," : "") << c.assignments[i][t];
    os << "]";
  }
  os << "],\"overlaps\":[";
  for (size_t k = 0; k < c.overlaps.size(); ++k) {
    const OverlapWitness& w = c.overlaps[k];
    os << (k ? "," : "") << "{\"i\":" << w.i << ",\"j\":" << w.j << ",\"s\":[";
    bool first = true;
    for (int e = 0; e < c.source.ground_size(); ++e)
      if ((w.subset >> e) & 1) {
        os << (first ? "" : ",") << e;
        first = false;
      }
    os << "],\"x\":[";
    for (int r = 0; r < w.x.rows(); ++r) {
      os << (r ? "," : "") << "[";
      for (int col = 0; col < w.x.cols(); ++col)
        os << (col ? "," : "") << w.x(r, col);
      os << "]";
    }
    os << "]}";
  }
  os << "],\"cell_images\":[";
  const ElementSet all = (ElementSet{1} << c.source.ground_size()) - 1;
  bool first = true;
  for (const std::vector<int>& cone : c.fan.cones) {
    ElementSet s = 0;
    for (int e : cone) s |= ElementSet{1} << e;
    os << (first ? "" : ",") << "{\"cone\":[";
    for (size_t t = 0; t < cone.size(); ++t) os << (t ? "," : "") << cone[t];
    os << "],\"matroid\":" << c.source.deleted(all & ~s).to_json() << "}";
    first = false;
  }
  os << "]}";
  return os.str();
}

}  // namespace tropmod
