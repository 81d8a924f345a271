// tropmod: command-line front end for the tropical moduli toolkit.

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tropmod/covers.hpp"
#include "tropmod/moduli_poset.hpp"
#include "tropmod/quadform.hpp"
#include "tropmod/torelli.hpp"
#include "tropmod/trivalent.hpp"
#include "verify_suite.hpp"

namespace {

using namespace tropmod;

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// Serves `key` from TROPMOD_CACHE_DIR when present; otherwise computes
// and fills the cache.
std::string cached(const std::string& key, const std::function<std::string()>& compute) {
  const char* dir = std::getenv("TROPMOD_CACHE_DIR");
  if (!dir || !*dir) return compute();
  std::filesystem::path path = std::filesystem::path(dir) / (key + ".json");
  if (std::ifstream in{path}) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  std::string result = compute();
  std::filesystem::create_directories(path.parent_path());
  std::ofstream(path) << result;
  return result;
}

std::string matrix_text(const RationalMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << ";";
    for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).str();
  }
  return os.str();
}

std::string matrix_text(const Eigen::MatrixXi& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << ";";
    for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
  }
  return os.str();
}

int run_trivalent(int genus, bool json) {
  std::vector<WeightedGraph> graphs = enumerate_trivalent(genus);
  if (!json) {
    std::cout << graphs.size() << "\n";
    return 0;
  }
  nlohmann::json j;
  j["genus"] = genus;
  j["count"] = graphs.size();
  j["graphs"] = nlohmann::json::array();
  for (const WeightedGraph& g : graphs) j["graphs"].push_back(g.to_text());
  std::cout << j.dump() << "\n";
  return 0;
}

int run_moduli(int genus, const std::string& mode) {
  if (mode == "fvector") {
    std::cout << join_ints(f_vector(build_moduli_poset(genus))) << "\n";
  } else if (mode == "dot") {
    std::cout << poset_to_dot(build_moduli_poset(genus));
  } else {
    std::cout << cached("moduli_g" + std::to_string(genus), [&] {
      return poset_to_json(build_moduli_poset(genus));
    }) << "\n";
  }
  return 0;
}

int run_schottky(int genus, const std::string& mode) {
  if (mode == "fvector") {
    std::cout << join_ints(schottky_f_vector(build_schottky_poset(genus))) << "\n";
  } else if (mode == "dot") {
    std::cout << schottky_to_dot(build_schottky_poset(genus));
  } else {
    std::cout << cached("schottky_g" + std::to_string(genus), [&] {
      return schottky_to_json(build_schottky_poset(genus));
    }) << "\n";
  }
  return 0;
}

int run_jacobian(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json curve = nlohmann::json::parse(in);
  WeightedGraph g = WeightedGraph::from_text(curve.at("graph").get<std::string>());
  MetricCurve c{g, {}};
  for (const auto& l : curve.at("lengths")) {
    if (l.is_number_integer())
      c.lengths.push_back(Rational(l.get<std::int64_t>()));
    else
      c.lengths.push_back(Rational::parse(l.get<std::string>()));
  }
  QuadForm q = tropical_jacobian(c);
  nlohmann::json j;
  j["genus"] = genus(g);
  j["jacobian"] = nlohmann::json::array();
  for (int i = 0; i < q.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < q.cols(); ++k) row.push_back(q(i, k).str());
    j["jacobian"].push_back(row);
  }
  j["cone_coefficients"] = nlohmann::json::array();
  for (const Rational& r : jacobian_in_cographic_cone(c))
    j["cone_coefficients"].push_back(r.str());
  std::cout << j.dump() << "\n";
  return 0;
}

int run_delone(const std::string& matrix, int window, bool json) {
  DelonePeriod d = delone_subdivision(parse_quadform(matrix), window);
  if (json) {
    std::cout << delone_to_json(d) << "\n";
    return 0;
  }
  std::cout << d.cells.size() << " cells; sizes:";
  for (const auto& c : d.cells) std::cout << " " << c.size();
  std::cout << "\n";
  return 0;
}

int run_reduce2(const std::string& matrix) {
  G2Result r = classify_g2(parse_quadform(matrix));
  const char* names[] = {"D1 (triangulated)", "D2 (square)", "D3 (segment)",
                         "D4 (point)"};
  std::cout << "class: " << names[static_cast<int>(r.cls)] << "\n"
            << "reduced: " << matrix_text(r.reduced) << "\n"
            << "transform: " << matrix_text(r.transform) << "\n";
  return 0;
}

int run_cover(int genus, bool json) {
  CoverMap c = genus == 3 ? build_cover_a3() : build_cover_a2();
  if (json) {
    std::cout << cover_to_json(c) << "\n";
    return 0;
  }
  const char* target = genus == 3 ? "MK4" : "U23";
  std::cout << c.overlaps.size() << " overlaps verified; "
            << c.assignments.size() << " deletions ≅ " << target << "; OK\n";
  return 0;
}

int run_verify_all(int genus_max, std::uint64_t seed) {
  auto checks = verify::run_all(genus_max, seed);
  bool all_ok = true;
  for (const auto& c : checks) {
    if (c.ok) {
      std::cout << "PASS " << c.name << "\n";
    } else {
      std::cout << "FAIL " << c.name << ": " << c.detail << "\n";
      all_ok = false;
    }
  }
  if (!all_ok) {
    for (const auto& c : checks)
      if (!c.ok) {
        std::cerr << "verify-all failed: " << c.name << "\n";
        break;
      }
    return 1;
  }
  std::cout << "OK (" << checks.size() << " checks)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on tropical moduli spaces"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads (0 = hardware default)");

  int tri_genus = 3;
  bool tri_json = false, tri_count = false;
  CLI::App* tri = app.add_subcommand("trivalent", "enumerate trivalent types");
  tri->add_option("--genus", tri_genus, "genus (2..6)")->required();
  tri->add_flag("--json", tri_json, "full graph list as JSON");
  tri->add_flag("--count", tri_count, "print the count only (default)");

  int mod_genus = 3;
  bool mod_fvector = false, mod_json = false, mod_dot = false;
  CLI::App* mod = app.add_subcommand("moduli", "cell poset of M_g^tr");
  mod->add_option("--genus", mod_genus, "genus (2..5)")->required();
  mod->add_flag("--fvector", mod_fvector, "f-vector, comma separated");
  mod->add_flag("--json", mod_json, "poset as JSON (default)");
  mod->add_flag("--dot", mod_dot, "Hasse diagram as DOT");

  int sch_genus = 3;
  bool sch_fvector = false, sch_json = false, sch_dot = false;
  CLI::App* sch = app.add_subcommand("schottky", "cell poset of A_g^cogr");
  sch->add_option("--genus", sch_genus, "genus (2..5)")->required();
  sch->add_flag("--fvector", sch_fvector, "f-vector, comma separated");
  sch->add_flag("--json", sch_json, "poset as JSON (default)");
  sch->add_flag("--dot", sch_dot, "Hasse diagram as DOT");

  std::string jac_curve;
  CLI::App* jac = app.add_subcommand("jacobian", "tropical Jacobian of a metric curve");
  jac->add_option("--curve", jac_curve, "curve JSON file: {graph, lengths}")->required();

  std::string del_matrix;
  int del_window = 3;
  bool del_json = false;
  CLI::App* del = app.add_subcommand("delone", "Delone subdivision of a definite form");
  del->add_option("--matrix", del_matrix, "form, e.g. \"2,-1;-1,2\"")->required();
  del->add_option("--window", del_window, "lattice window (default 3)");
  del->add_flag("--json", del_json, "cells as JSON");

  std::string red_matrix;
  CLI::App* red = app.add_subcommand("reduce2", "reduce a 2x2 form into the fundamental cone");
  red->add_option("--matrix", red_matrix, "form, e.g. \"1,4;4,17\"")->required();

  int cov_genus = 3;
  bool cov_verify = false, cov_json = false;
  CLI::App* cov = app.add_subcommand("cover", "matroid-glued cover of A_g^tr");
  cov->add_option("--genus", cov_genus, "genus (2 or 3)")
      ->check(CLI::IsMember({2, 3}))
      ->required();
  cov->add_flag("--verify", cov_verify, "build, verify, print a summary (default)");
  cov->add_flag("--json", cov_json, "assignments, witnesses, cell images as JSON");

  CLI::App* tab = app.add_subcommand("tables", "computed vs literature cell counts");

  int va_genus_max = 5;
  std::uint64_t va_seed = 1;
  CLI::App* va = app.add_subcommand("verify-all", "run every acceptance check");
  va->add_option("--genus-max", va_genus_max, "largest genus to check (default 5)");
  va->add_option("--seed", va_seed, "seed for randomized property tests");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (tri->parsed()) return run_trivalent(tri_genus, tri_json);
    if (mod->parsed())
      return run_moduli(mod_genus, mod_fvector ? "fvector" : (mod_dot ? "dot" : "json"));
    if (sch->parsed())
      return run_schottky(sch_genus, sch_fvector ? "fvector" : (sch_dot ? "dot" : "json"));
    if (jac->parsed()) return run_jacobian(jac_curve);
    if (del->parsed()) return run_delone(del_matrix, del_window, del_json);
    if (red->parsed()) return run_reduce2(red_matrix);
    if (cov->parsed()) return run_cover(cov_genus, cov_json);
    if (tab->parsed()) {
      std::cout << reproduce_tables();
      return 0;
    }
    if (va->parsed()) return run_verify_all(va_genus_max, va_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
