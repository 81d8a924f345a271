#include "tropmod/weighted_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tropmod {

WeightedGraph::WeightedGraph(std::vector<int> weights, std::vector<Edge> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)) {
  if (weights_.empty()) throw std::invalid_argument("graph needs at least one vertex");
  for (int w : weights_)
    if (w < 0) throw std::invalid_argument("negative weight");
  for (const Edge& e : edges_)
    if (e.u < 0 || e.v >= num_vertices())
      throw std::invalid_argument("edge endpoint out of range");
}

int WeightedGraph::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0);
}

bool WeightedGraph::is_connected() const {
  const int n = num_vertices();
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges_) {
    if (!e.is_loop()) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

int WeightedGraph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_) {
    if (e.is_loop()) {
      if (e.u == v) d += 2;
    } else if (e.u == v || e.v == v) {
      ++d;
    }
  }
  return d;
}

int WeightedGraph::loops_at(int v) const {
  int c = 0;
  for (const Edge& e : edges_)
    if (e.is_loop() && e.u == v) ++c;
  return c;
}

std::string WeightedGraph::to_text() const {
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream os;
  os << "n=" << num_vertices() << ";w=";
  for (int i = 0; i < num_vertices(); ++i) {
    if (i) os << ',';
    os << weights_[i];
  }
  os << ";E=";
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (i) os << ',';
    os << '(' << sorted[i].u << ',' << sorted[i].v << ')';
  }
  return os.str();
}

WeightedGraph WeightedGraph::from_text(const std::string& s) {
  auto fail = [&] { throw std::invalid_argument("bad graph encoding: " + s); };
  int n = 0;
  std::vector<int> weights;
  std::vector<Edge> edges;
  size_t pos = s.find("n=");
  if (pos != 0) fail();
  size_t semi = s.find(';');
  if (semi == std::string::npos) fail();
  n = std::stoi(s.substr(2, semi - 2));
  size_t wpos = s.find("w=", semi);
  size_t semi2 = s.find(';', wpos);
  if (wpos == std::string::npos || semi2 == std::string::npos) fail();
  {
    std::istringstream is(s.substr(wpos + 2, semi2 - wpos - 2));
    std::string tok;
    while (std::getline(is, tok, ',')) weights.push_back(std::stoi(tok));
  }
  if (static_cast<int>(weights.size()) != n) fail();
  size_t epos = s.find("E=", semi2);
  if (epos == std::string::npos) fail();
  std::string rest = s.substr(epos + 2);
  size_t i = 0;
  while (i < rest.size()) {
    if (rest[i] == ',') { ++i; continue; }
    if (rest[i] != '(') fail();
    size_t close = rest.find(')', i);
    if (close == std::string::npos) fail();
    std::string pair = rest.substr(i + 1, close - i - 1);
    size_t comma = pair.find(',');
    if (comma == std::string::npos) fail();
    edges.emplace_back(std::stoi(pair.substr(0, comma)), std::stoi(pair.substr(comma + 1)));
    i = close + 1;
  }
  return WeightedGraph(std::move(weights), std::move(edges));
}

WeightedGraph WeightedGraph::relabeled(const std::vector<int>& perm) const {
  std::vector<int> w(num_vertices());
  for (int v = 0; v < num_vertices(); ++v) w[perm[v]] = weights_[v];
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (const Edge& e : edges_) es.emplace_back(perm[e.u], perm[e.v]);
  return WeightedGraph(std::move(w), std::move(es));
}

int genus(const WeightedGraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("not connected");
  return g.num_edges() - g.num_vertices() + 1 + g.total_weight();
}

bool is_valid_type(const WeightedGraph& g, int target_genus) {
  if (!g.is_connected()) return false;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.weights()[v] == 0 && g.degree(v) < 3) return false;
  return genus(g) == target_genus;
}

WeightedGraph contract_edge(const WeightedGraph& g, int edge_index) {
  if (edge_index < 0 || edge_index >= g.num_edges())
    throw std::invalid_argument("edge not present");
  const Edge e = g.edges()[edge_index];
  if (e.is_loop()) {
    std::vector<int> w = g.weights();
    w[e.u] += 1;
    std::vector<Edge> es;
    for (int i = 0; i < g.num_edges(); ++i)
      if (i != edge_index) es.push_back(g.edges()[i]);
    return WeightedGraph(std::move(w), std::move(es));
  }
  const int a = e.u, b = e.v;  // a < b; merge b into a
  auto remap = [&](int v) {
    if (v == b) return a;
    return v > b ? v - 1 : v;
  };
  std::vector<int> w;
  w.reserve(g.num_vertices() - 1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (v == b) continue;
    w.push_back(v == a ? g.weights()[a] + g.weights()[b] : g.weights()[v]);
  }
  std::vector<Edge> es;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (i == edge_index) continue;
    const Edge& f = g.edges()[i];
    es.emplace_back(remap(f.u), remap(f.v));
  }
  return WeightedGraph(std::move(w), std::move(es));
}

namespace {

// Multiplicity matrix: m[u][v] = parallel edge count, m[v][v] = loop count.
std::vector<std::vector<int>> multiplicity_matrix(const WeightedGraph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop())
      m[e.u][e.u] += 1;
    else {
      m[e.u][e.v] += 1;
      m[e.v][e.u] += 1;
    }
  }
  return m;
}

// Iterated degree/weight refinement. Returns per-vertex class indices,
// where class order is determined by canonical (label-independent) keys.
std::vector<int> refined_classes(const WeightedGraph& g,
                                 const std::vector<std::vector<int>>& m) {
  const int n = g.num_vertices();
  std::vector<std::string> color(n);
  for (int v = 0; v < n; ++v) {
    color[v] = std::to_string(g.weights()[v]) + "." + std::to_string(g.degree(v)) +
               "." + std::to_string(m[v][v]);
  }
  for (int round = 0; round < n; ++round) {
    std::vector<std::string> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::string> nb;
      for (int u = 0; u < n; ++u)
        if (u != v && m[v][u] > 0)
          nb.push_back(color[u] + "x" + std::to_string(m[v][u]));
      std::sort(nb.begin(), nb.end());
      std::string s = color[v] + "|";
      for (const auto& t : nb) s += t + ";";
      next[v] = s;
    }
    if (next == color) break;
    color = next;
  }
  std::vector<std::string> keys = color;
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<int> cls(n);
  for (int v = 0; v < n; ++v)
    cls[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), color[v]) -
                              keys.begin());
  return cls;
}

// Individualization-refinement canonical search. Colors are dense
// ranks assigned from label-independent keys; the certificate is the
// minimum leaf encoding over the invariant search tree whose branch
// cell is always the lowest-ranked non-singleton color class.
struct CanonSearch {
  int n;
  const std::vector<int>& weights;
  const std::vector<std::vector<int>>& m;
  std::vector<int> best;
  bool have_best = false;

  // Re-rank colors by invariant keys until the partition stops splitting.
  void refine(std::vector<int>& color) const {
    std::vector<std::vector<int>> key(n);
    std::vector<int> idx(n), next(n);
    std::vector<std::pair<int, int>> nb;
    while (true) {
      for (int v = 0; v < n; ++v) {
        auto& k = key[v];
        k.clear();
        k.push_back(color[v]);
        nb.clear();
        for (int u = 0; u < n; ++u)
          if (u != v && m[v][u] > 0) nb.emplace_back(color[u], m[v][u]);
        std::sort(nb.begin(), nb.end());
        for (auto& [c, mult] : nb) {
          k.push_back(c);
          k.push_back(mult);
        }
      }
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(),
                [&](int a, int b) { return key[a] < key[b]; });
      int rank = 0;
      next[idx[0]] = 0;
      for (int i = 1; i < n; ++i) {
        if (key[idx[i]] != key[idx[i - 1]]) ++rank;
        next[idx[i]] = rank;
      }
      if (next == color) return;
      color = next;
    }
  }

  void descend(std::vector<int> color) {
    refine(color);
    // Lowest color class with more than one vertex.
    std::vector<int> count(n, 0);
    for (int v = 0; v < n; ++v) ++count[color[v]];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (count[c] > 1) { target = c; break; }
    if (target < 0) {
      leaf(color);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      std::vector<int> child = color;
      for (int u = 0; u < n; ++u)
        if (u != v && child[u] >= target) ++child[u];
      descend(std::move(child));
    }
  }

  void leaf(const std::vector<int>& color) {
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[color[v]] = v;
    std::vector<int> enc;
    enc.reserve(n + n * (n + 1) / 2);
    for (int k = 0; k < n; ++k) enc.push_back(weights[order[k]]);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) enc.push_back(m[order[i]][order[j]]);
    if (!have_best || enc < best) {
      best = std::move(enc);
      have_best = true;
    }
  }
};

}  // namespace

CanonicalCert canonical_certificate(const WeightedGraph& g) {
  if (g.num_vertices() > 16) throw std::invalid_argument("too large");
  const int n = g.num_vertices();
  auto m = multiplicity_matrix(g);

  CanonSearch search{n, g.weights(), m, {}, false};
  // Initial colors from (weight, loops, degree).
  std::vector<std::vector<int>> key(n);
  for (int v = 0; v < n; ++v) key[v] = {g.weights()[v], m[v][v], g.degree(v)};
  std::vector<int> idx(n), color(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return key[a] < key[b]; });
  int rank = 0;
  color[idx[0]] = 0;
  for (int i = 1; i < n; ++i) {
    if (key[idx[i]] != key[idx[i - 1]]) ++rank;
    color[idx[i]] = rank;
  }
  search.descend(std::move(color));

  std::ostringstream os;
  os << n << ":";
  for (size_t i = 0; i < search.best.size(); ++i) os << search.best[i] << ",";
  return CanonicalCert{os.str()};
}

std::uint64_t automorphism_edge_group_order(const WeightedGraph& g) {
  if (g.num_vertices() > 16) throw std::invalid_argument("too large");
  const int n = g.num_vertices();
  auto m = multiplicity_matrix(g);
  auto cls = refined_classes(g, m);

  // Parallel classes: vertex pairs (u <= v) carrying at least one edge.
  std::vector<std::pair<int, int>> pclasses;
  std::uint64_t within = 1;
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v)
      if (m[u][v] > 0) {
        pclasses.emplace_back(u, v);
        for (int i = 2; i <= m[u][v]; ++i) within *= i;
      }

  // Enumerate weight- and adjacency-preserving vertex permutations;
  // collect the distinct induced maps on parallel classes.
  std::set<std::vector<int>> class_maps;
  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  auto index_of = [&](int u, int v) {
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    return static_cast<int>(std::lower_bound(pclasses.begin(), pclasses.end(), key) -
                            pclasses.begin());
  };
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      std::vector<int> cm(pclasses.size());
      for (size_t i = 0; i < pclasses.size(); ++i)
        cm[i] = index_of(perm[pclasses[i].first], perm[pclasses[i].second]);
      class_maps.insert(cm);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || cls[v] != cls[k] || g.weights()[v] != g.weights()[k]) continue;
      bool ok = m[v][v] == m[k][k];
      for (int j = 0; ok && j < k; ++j)
        if (m[k][j] != m[v][perm[j]]) ok = false;
      if (!ok) continue;
      used[v] = 1;
      perm[k] = v;
      rec(k + 1);
      perm[k] = -1;
      used[v] = 0;
    }
  };
  rec(0);
  return static_cast<std::uint64_t>(class_maps.size()) * within;
}

}  // namespace tropmod
