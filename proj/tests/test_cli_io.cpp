#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coarse/covering.hpp"
#include "coarse/errors.hpp"
#include "coarse/json_io.hpp"
#include "coarse/walls.hpp"
#include "coarse/wreath.hpp"
#include "oracles.hpp"

using namespace coarse;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(COARSE_LAB_BIN) + " " + args;
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string scratch(const std::string& name) { return (std::filesystem::path(CLI_SCRATCH_DIR) / name).string(); }

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

LabeledGraph two_cycles(std::size_t n) {
  std::vector<EdgeSpec> edges;
  for (Vertex c = 0; c < 2; ++c)
    for (Vertex i = 0; i < n; ++i) edges.push_back({static_cast<Vertex>(c * n + i), static_cast<Vertex>(c * n + (i + 1) % n), Letter(0, false)});
  return build_graph(Alphabet::letters(1), 2 * n, edges);
}

}  // namespace

TEST_CASE("graph documents round trip") {
  std::vector<LabeledGraph> graphs{graphs::cycle(4), graphs::complete(4), graphs::theta(3), graphs::path(5),
                                   homology_cover(graphs::complete(4)).cover, two_cycles(40)};
  std::vector<Element> id{0, 1, 2};
  graphs.push_back(wreath_cayley(WreathGroup(groups::cyclic(3), groups::cyclic(3), id)).graph);
  graphs.push_back(build_graph(Alphabet::letters(2), 3, {{0, 0, Letter(0, false)}, {0, 1, Letter::none()}, {1, 2, Letter(1, true)}}));
  Rng rng(77);
  for (int i = 0; i < 50; ++i) graphs.push_back(oracle::random_reduced_graph(rng, 10, 3));
  for (const auto& g : graphs) {
    const auto text = serialize_graph(g);
    const auto doc = parse_graph(text);
    CHECK(doc.graph == g);
    CHECK(serialize_graph(doc.graph) == text);
  }
}

TEST_CASE("annotations round trip") {
  const auto s3 = groups::symmetric(3);
  const auto back = group_from_json(group_to_json(s3));
  CHECK(back.order() == 6);
  CHECK(back.generators() == s3.generators());
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) CHECK(back.mul(a, b) == s3.mul(a, b));

  const auto cm = homology_cover(graphs::complete(4));
  const auto doc = parse_graph(serialize_graph(cm.cover, {{"covering", covering_to_json(cm)}}));
  const auto again = covering_from_document(doc);
  CHECK(again.vertex_map == cm.vertex_map);
  CHECK(again.dart_map == cm.dart_map);
  CHECK(again.base == cm.base);

  const auto w = walls_from_cover(cm);
  CHECK(walls_from_json(walls_to_json(w)).walls == w.walls);

  Eigen::MatrixXd pts(3, 2);
  pts << 0.5, -0.25, 1e-17, 3.0, -2.0, 0.125;
  CHECK(points_from_json(points_to_json(pts), "points") == pts);
}

TEST_CASE("parse errors name the field") {
  auto j = graph_to_json(graphs::cycle(4));
  j["edges"][2]["v"] = 99;
  try {
    graph_from_json(j);
    FAIL("accepted an edge to vertex 99");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("edges[2]") != std::string::npos);
  }

  j = graph_to_json(graphs::cycle(4));
  j["edges"][1]["label"] = "zz";
  try {
    graph_from_json(j);
    FAIL("accepted an undeclared label");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("edges[1]") != std::string::npos);
  }

  j = graph_to_json(graphs::cycle(4));
  j["colour"] = "blue";
  CHECK_THROWS_AS(graph_from_json(j), InputError);
  ParseOptions lenient;
  lenient.strict = false;
  CHECK(graph_from_json(j, lenient).graph == graphs::cycle(4));

  j = graph_to_json(graphs::cycle(4));
  j["format_version"] = "2";
  CHECK_THROWS_AS(graph_from_json(j), InputError);
  CHECK_THROWS_AS(parse_graph("{\"edges\": ["), InputError);
}

TEST_CASE("cli exit codes") {
  CHECK(run("> /dev/null 2>&1").code == 2);
  CHECK(run("frobnicate > /dev/null 2>&1").code == 2);
  CHECK(run("--help > /dev/null 2>&1").code == 0);
  CHECK(run("lps --p 5 --q 29 > /dev/null 2>&1").code == 2);
  CHECK(run("lps --p 5 --q 73 > /dev/null 2>&1").code == 3);
  CHECK(run("girth --in /nonexistent/file.json > /dev/null 2>&1").code == 2);

  const auto path = scratch("bad_edge.json");
  auto j = graph_to_json(graphs::cycle(4));
  j["edges"][0]["u"] = 99;
  write_file(path, dump(j));
  const auto r = run("girth --in " + path + " 2>&1");
  CHECK(r.code == 2);
  CHECK(r.out.find("edges[0]") != std::string::npos);

  // ⟨a, b | ab⁻¹⟩ is infinite: coset enumeration stops at its cap
  const auto free_path = scratch("digon.json");
  write_file(free_path, serialize_graph(build_graph(Alphabet::letters(2), 2, {{0, 1, Letter(0, false)}, {0, 1, Letter(1, false)}})));
  CHECK(run("present --order --in " + free_path + " > /dev/null 2>&1").code == 3);

  // a single-letter hexagon has no C'(1/2) labeling
  const auto hex = scratch("hexagon.json");
  write_file(hex, serialize_graph(graphs::cycle(6)));
  CHECK(run("label --random --alphabet 1 --lambda 1/2 --seed 1 --max-attempts 5 --in " + hex + " > /dev/null 2>&1").code == 4);
  CHECK(run("label --random --alphabet 2 --lambda 1/2 --in " + hex + " > /dev/null 2>&1").code == 2);
}

TEST_CASE("lps into spectrum") {
  const auto r = run("lps --p 5 --q 13 2>/dev/null | " + std::string(COARSE_LAB_BIN) + " spectrum 2>&1");
  CHECK(r.code == 0);
  CHECK(r.out.find("vertices: 2184") != std::string::npos);
  CHECK(r.out.find("degree: 6") != std::string::npos);
  CHECK(r.out.find("ramanujan margin: 0.222415106") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("randomized commands are byte identical under a seed") {
  const auto in = scratch("two40.json");
  write_file(in, serialize_graph(two_cycles(40)));
  const auto a = run("label --random --alphabet 4 --lambda 1/6 --seed 7 --in " + in + " 2>/dev/null");
  const auto b = run("label --random --alphabet 4 --lambda 1/6 --seed 7 --in " + in + " 2>/dev/null");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto doc = parse_graph(a.out);
  CHECK(doc.annotations["labeling"]["seed"] == 7);
  CHECK(doc.graph.vertex_count() == 80);

  const auto w = scratch("w3.json");
  CHECK(run("wreath --q-table cyclic:3 --b-table cyclic:3 --out " + w + " 2>/dev/null").code == 0);
  const auto p1 = run("poincare --relative --seed 5 --trials 200 --in " + w + " --out - 2>/dev/null");
  const auto p2 = run("poincare --relative --seed 5 --trials 200 --in " + w + " --out - 2>/dev/null");
  CHECK(p1.code == 0);
  CHECK(p1.out == p2.out);
  CHECK(run("poincare --relative --trials 10 --in " + w + " > /dev/null 2>&1").code == 2);
}

TEST_CASE("poincare report on the 24 element wreath product") {
  const auto w = scratch("w3p.json");
  const auto rep = scratch("w3p_report.json");
  CHECK(run("wreath --q-table cyclic:3 --b-table cyclic:3 --out " + w + " 2>/dev/null").code == 0);
  CHECK(run("poincare --relative --in " + w + " --out " + rep + " > /dev/null 2>&1").code == 0);
  const auto j = parse_json_text(read_file(rep));
  CHECK(j["constant"].get<double>() == doctest::Approx(1.52051760426961).epsilon(1e-12));
  CHECK(j["witness"].size() == 24);
  CHECK(j["order"] == 24);
}

TEST_CASE("cover and wall pipeline") {
  const auto k4 = scratch("k4.json");
  write_file(k4, serialize_graph(graphs::complete(4)));
  const auto r = run("cover --in " + k4 + " 2>/dev/null | " + std::string(COARSE_LAB_BIN) + " walls 2>&1 >/dev/null");
  CHECK(r.code == 0);
  CHECK(r.out.find("walls: 6 walls of 8 edges, two-component test PASS") != std::string::npos);

  const auto cover = scratch("k4_cover.json");
  CHECK(run("cover --in " + k4 + " --out " + cover + " 2>/dev/null").code == 0);
  CHECK(run("wallmetric --in " + cover + " > /dev/null 2>&1").code == 0);
  const auto csv = run("moduli --in " + cover + " 2>/dev/null");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("t,rho,gamma,count", 0) == 0);
  CHECK(run("weakembed --in " + cover + " --in " + cover + " > /dev/null 2>&1").code == 4);
}
