#include "tropmod/moduli_poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tropmod/trivalent.hpp"

namespace tropmod {

CellPoset build_poset_from_maximal(int g, const std::vector<WeightedGraph>& maximal) {
  // Worklist closure under 1-edge contractions, breadth-first by
  // descending rank. Dedupe by certificate.
  struct Node {
    WeightedGraph graph;
    int rank;
  };
  std::map<CanonicalCert, Node> by_cert;
  std::set<std::pair<CanonicalCert, CanonicalCert>> cover_certs;  // (lower, upper)

  std::vector<CanonicalCert> frontier;
  for (const auto& graph : maximal) {
    CanonicalCert cert = canonical_certificate(graph);
    if (by_cert.emplace(cert, Node{graph, graph.num_edges()}).second)
      frontier.push_back(cert);
  }
  while (!frontier.empty()) {
    std::vector<CanonicalCert> next;
    for (const auto& cert : frontier) {
      const Node node = by_cert.at(cert);
      for (int e = 0; e < node.graph.num_edges(); ++e) {
        WeightedGraph contracted = contract_edge(node.graph, e);
        CanonicalCert sub = canonical_certificate(contracted);
        auto [it, inserted] =
            by_cert.emplace(sub, Node{contracted, contracted.num_edges()});
        if (inserted) next.push_back(sub);
        cover_certs.emplace(sub, cert);
      }
    }
    frontier = std::move(next);
  }

  CellPoset p;
  p.genus = g;
  // Ids in (rank, certificate) order.
  std::vector<const std::pair<const CanonicalCert, Node>*> entries;
  entries.reserve(by_cert.size());
  for (const auto& kv : by_cert) entries.push_back(&kv);
  std::stable_sort(entries.begin(), entries.end(), [](const auto* a, const auto* b) {
    if (a->second.rank != b->second.rank) return a->second.rank < b->second.rank;
    return a->first < b->first;
  });
  std::map<CanonicalCert, int> id_of;
  for (size_t i = 0; i < entries.size(); ++i) {
    id_of[entries[i]->first] = static_cast<int>(i);
    p.cells.push_back(Cell{entries[i]->second.graph, entries[i]->second.rank,
                           entries[i]->first, static_cast<int>(i)});
  }
  for (const auto& [lo, hi] : cover_certs) p.covers.emplace(id_of.at(lo), id_of.at(hi));
  return p;
}

CellPoset build_moduli_poset(int g) {
  if (g < 2 || g > 5) throw std::invalid_argument("genus out of range");
  return build_poset_from_maximal(g, enumerate_trivalent(g));
}

std::vector<int> f_vector(const CellPoset& p) {
  int max_rank = 0;
  for (const Cell& c : p.cells) max_rank = std::max(max_rank, c.rank);
  std::vector<int> f(max_rank + 1, 0);
  for (const Cell& c : p.cells) ++f[c.rank];
  return f;
}

std::vector<Cell> maximal_cells(const CellPoset& p) {
  std::vector<char> has_upper(p.cells.size(), 0);
  for (const auto& [lo, hi] : p.covers) has_upper[lo] = 1;
  std::vector<Cell> out;
  for (const Cell& c : p.cells)
    if (!has_upper[c.id]) out.push_back(c);
  return out;
}

std::string poset_to_json(const CellPoset& p) {
  std::ostringstream os;
  os << "{\"genus\":" << p.genus << ",\"fvector\":[";
  auto f = f_vector(p);
  for (size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << "],\"cells\":[";
  for (size_t i = 0; i < p.cells.size(); ++i) {
    const Cell& c = p.cells[i];
    os << (i ? "," : "") << "{\"id\":" << c.id << ",\"rank\":" << c.rank
       << ",\"graph\":\"" << c.graph.to_text() << "\"}";
  }
  os << "],\"covers\":[";
  bool first = true;
  for (const auto& [lo, hi] : p.covers) {
    os << (first ? "" : ",") << "[" << lo << "," << hi << "]";
    first = false;
  }
  os << "]}";
  return os.str();
}

std::string poset_to_dot(const CellPoset& p) {
  std::ostringstream os;
  os << "digraph P" << p.genus << " {\n  rankdir=BT;\n";
  auto f = f_vector(p);
  for (size_t r = 0; r < f.size(); ++r) {
    os << "  { rank=same;";
    for (const Cell& c : p.cells)
      if (c.rank == static_cast<int>(r)) os << " c" << c.id << ";";
    os << " }\n";
  }
  for (const Cell& c : p.cells)
    os << "  c" << c.id << " [label=\"" << c.id << " (r" << c.rank << ")\"];\n";
  for (const auto& [lo, hi] : p.covers) os << "  c" << lo << " -> c" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tropmod
