// coarse_lab: command-line front end. Graph-producing commands write a graph
// document to stdout (or --out) and a short summary to stderr; analysis
// commands read a document from --in (default stdin) and print a report.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coarse/cheeger.hpp"
#include "coarse/covering.hpp"
#include "coarse/errors.hpp"
#include "coarse/graph_metrics.hpp"
#include "coarse/json_io.hpp"
#include "coarse/labelings.hpp"
#include "coarse/lps.hpp"
#include "coarse/metric_diag.hpp"
#include "coarse/poincare.hpp"
#include "coarse/presentation.hpp"
#include "coarse/spectrum.hpp"
#include "coarse/walls.hpp"
#include "coarse/wreath.hpp"

using namespace coarse;

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream s;
  if (path == "-") {
    s << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    s << in.rdbuf();
  }
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::string fixed(double x, int digits = 6) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << x;
  return s.str();
}

std::vector<Element> parse_list(const std::string& text) {
  std::vector<Element> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("malformed list '" + text + "'");
    out.push_back(static_cast<Element>(std::stoul(item)));
  }
  return out;
}

// A group is a JSON table file or one of cyclic:n[:g,h,...], symmetric:n,
// dihedral:n, quaternion.
FiniteGroupTable load_group(const std::string& spec) {
  auto number = [&](const std::string& s) {
    if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad group spec '" + spec + "'");
    return static_cast<std::size_t>(std::stoul(s));
  };
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "cyclic") {
    const auto c2 = rest.find(':');
    if (c2 == std::string::npos) return groups::cyclic(number(rest));
    return groups::cyclic(number(rest.substr(0, c2)), parse_list(rest.substr(c2 + 1)));
  }
  if (kind == "symmetric") return groups::symmetric(number(rest));
  if (kind == "dihedral") return groups::dihedral(number(rest));
  if (kind == "quaternion") return groups::quaternion();
  return group_from_json(parse_json_text(read_input(spec)), spec);
}

Json check_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out;
}

Json optional_size(const std::optional<std::size_t>& x) { return x ? Json(*x) : Json(nullptr); }

struct Common {
  std::string in = "-";
  std::string out;
  bool lenient = false;
  ParseOptions parse() const { return {!lenient}; }
};

void add_io(CLI::App* app, Common& c, bool input = true) {
  if (input) app->add_option("--in", c.in, "input document (default: stdin)");
  app->add_option("--out", c.out, "output file (default: stdout)");
  app->add_flag("--lenient", c.lenient, "ignore unknown JSON fields");
}

// ---------------------------------------------------------------- commands

int cmd_lps(const Common& io, std::uint32_t p, std::uint32_t q, bool allow_large) {
  LpsOptions opts;
  opts.allow_large = allow_large;
  const LpsGraph lps = lps_graph(p, q, opts);
  Json quads = Json::array();
  for (const auto& a : lps.quadruples) quads.push_back(a);
  Json mats = Json::array();
  for (Element s : lps.generators) mats.push_back(lps.group.matrix(s));
  Json labels = Json::array();
  for (Element e = 0; e < lps.group.order(); ++e) {
    const auto& m = lps.group.matrix(e);
    labels.push_back(std::to_string(m[0]) + " " + std::to_string(m[1]) + " " + std::to_string(m[2]) + " " +
                     std::to_string(m[3]));
  }
  Json ann{{"lps",
            {{"p", p}, {"q", q}, {"legendre", lps.params.legendre}, {"quadruples", quads},
             {"generators", lps.generators}, {"generator_matrices", mats}}},
           {"vertex_labels", labels}};
  write_output(io.out, serialize_graph(lps.graph, ann));
  std::cerr << "lps: X^{" << p << "," << q << "} with " << lps.graph.vertex_count() << " vertices, "
            << lps.graph.edge_count() << " edges, degree " << degree_bounds(lps.graph).max << "\n";
  return 0;
}

int cmd_spectrum(const Common& io) {
  const GraphDocument doc = parse_graph(read_input(io.in), io.parse());
  const LabeledGraph& g = doc.graph;
  Json rep{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"components", g.component_count()}};
  const auto deg = degree_bounds(g);
  rep["degree_bounds"] = {deg.min, deg.max};
  std::ostringstream h;
  h << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count() << "\ndegree: " << deg.min;
  if (deg.max != deg.min) h << ".." << deg.max;
  h << "\n";
  int code = 0;
  const std::vector<double> eig = adjacency_spectrum(g);
  rep["eigenvalues"] = eig;
  if (!eig.empty()) h << "top eigenvalue: " << fixed(eig.front(), 9) << "\nbottom eigenvalue: " << fixed(eig.back(), 9) << "\n";
  if (g.connected() && g.vertex_count() > 1) {
    const double gap = spectral_gap(g);
    rep["laplacian_gap"] = gap;
    h << "laplacian gap: " << fixed(gap, 9) << "\n";
    if (deg.min == deg.max && deg.max > 0) {
      const auto rad = nontrivial_spectral_radius(g);
      const double bound = 2.0 * std::sqrt(static_cast<double>(deg.max) - 1.0);
      rep["nontrivial_radius"] = rad.value;
      rep["ramanujan_bound"] = bound;
      rep["ramanujan_margin"] = bound - rad.value;
      h << "nontrivial spectral radius: " << fixed(rad.value, 9) << "\nramanujan bound 2*sqrt(d-1): " << fixed(bound, 9)
        << "\nramanujan margin: " << fixed(bound - rad.value, 9) << "\n";
    }
  }
  if (const auto it = doc.annotations.find("lps"); it != doc.annotations.end()) {
    const auto params = lps_params(it->at("p").get<std::uint32_t>(), it->at("q").get<std::uint32_t>());
    const LpsReport lr = verify_lps(g, params);
    rep["lps_checks"] = check_json(lr.checks);
    rep["lps_pass"] = lr.pass;
    rep["girth"] = optional_size(lr.girth);
    rep["girth_bound"] = lr.girth_bound;
    rep["diameter"] = optional_size(lr.diameter);
    rep["diameter_over_log_n"] = lr.diameter_over_log_n;
    for (const auto& c : lr.checks) h << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " (" << c.detail << ")\n";
    if (!lr.pass) code = 4;
  }
  std::cout << h.str();
  if (!io.out.empty()) write_output(io.out, dump(rep));
  return code;
}

int cmd_cheeger(const Common& io, std::size_t cap) {
  const GraphFamily fam = GraphFamily::from_graph(parse_graph(read_input(io.in), io.parse()).graph);
  Json rep = Json::array();
  for (std::size_t c = 0; c < fam.size(); ++c) {
    const auto r = cheeger_exact(fam.components[c], {cap});
    std::cout << "component " << c << ": h = " << r.boundary << "/" << r.size << " = " << fixed(r.value(), 9)
              << ", witness {";
    for (std::size_t i = 0; i < r.witness.size(); ++i) std::cout << (i ? "," : "") << r.witness[i];
    std::cout << "}\n";
    rep.push_back({{"component", c}, {"boundary", r.boundary}, {"size", r.size}, {"value", r.value()}, {"witness", r.witness}});
  }
  if (!io.out.empty()) write_output(io.out, dump(rep));
  return 0;
}

int cmd_girth(const Common& io) {
  GraphFamily fam = GraphFamily::from_graph(parse_graph(read_input(io.in), io.parse()).graph);
  fam.compute_metadata();
  Json rep = Json::array();
  for (std::size_t c = 0; c < fam.size(); ++c) {
    const auto& m = fam.metadata[c];
    std::cout << "component " << c << ": size " << m.size << ", girth " << (m.girth ? std::to_string(*m.girth) : "inf")
              << ", diameter " << m.diameter;
    Json e{{"component", c}, {"size", m.size}, {"girth", optional_size(m.girth)}, {"diameter", m.diameter}};
    if (m.girth) {
      const double ratio = static_cast<double>(m.diameter) / static_cast<double>(*m.girth);
      std::cout << ", diam/girth " << fixed(ratio);
      e["dg_ratio"] = ratio;
    }
    std::cout << "\n";
    rep.push_back(std::move(e));
  }
  if (!io.out.empty()) write_output(io.out, dump(rep));
  return 0;
}

int cmd_cover(const Common& io, std::size_t k, std::size_t cap) {
  const GraphDocument doc = parse_graph(read_input(io.in), io.parse());
  const IteratedCover ic = iterate_homology_cover(doc.graph, k, {cap});
  const CoveringMap& cm = ic.composite;
  Json stages = Json::array();
  for (const auto& s : ic.stages) stages.push_back({{"vertices", s.cover.vertex_count()}, {"deck_rank", s.deck_rank}});
  Json ann{{"covering", covering_to_json(cm)}, {"stages", stages}};
  // Walls of an iterated cover are the edge fibers of its last stage.
  try {
    const WallDecomposition w = walls_from_cover(ic.stages.back());
    if (validate_walls(cm.cover, w).ok) ann["walls"] = walls_to_json(w);
  } catch (const VerificationFailure&) {
  }
  write_output(io.out, serialize_graph(cm.cover, ann));
  std::cerr << "cover: " << k << " iteration(s), " << cm.cover.vertex_count() << " vertices, " << cm.cover.edge_count()
            << " edges, total deck rank " << cm.deck_rank << "\n";
  return 0;
}

int cmd_walls(const Common& io) {
  GraphDocument doc = parse_graph(read_input(io.in), io.parse());
  WallDecomposition w;
  if (const auto it = doc.annotations.find("walls"); it != doc.annotations.end())
    w = walls_from_json(*it);
  else
    w = walls_from_cover(covering_from_document(doc, io.parse()));
  const auto chk = validate_walls(doc.graph, w);
  std::cerr << "walls: " << w.size() << " walls";
  if (!w.walls.empty()) std::cerr << " of " << w.walls.front().size() << " edges";
  std::cerr << ", two-component test " << (chk.ok ? "PASS" : "FAIL: " + chk.reason) << "\n";
  doc.annotations["walls"] = walls_to_json(w);
  write_output(io.out, dump(graph_to_json(doc.graph, doc.annotations)));
  return chk.ok ? 0 : 4;
}

WallDecomposition walls_of(const GraphDocument& doc, const ParseOptions& po) {
  if (const auto it = doc.annotations.find("walls"); it != doc.annotations.end()) return walls_from_json(*it);
  return walls_from_cover(covering_from_document(doc, po));
}

int cmd_wallmetric(const Common& io, Vertex basepoint, bool embed) {
  const GraphDocument doc = parse_graph(read_input(io.in), io.parse());
  const LabeledGraph& g = doc.graph;
  const WallDecomposition w = walls_of(doc, io.parse());
  const auto dw = wall_pseudometric(g, w);
  const auto dg = distance_matrix(g);
  const auto emb = wall_hilbert_embedding(g, w, basepoint);
  const std::size_t n = g.vertex_count();
  bool below = true, exact = true, pseudo = true;
  for (std::size_t x = 0; x < n; ++x) {
    pseudo = pseudo && dw[x * n + x] == 0;
    for (std::size_t y = 0; y < n; ++y) {
      below = below && dw[x * n + y] <= dg[x * n + y];
      pseudo = pseudo && dw[x * n + y] == dw[y * n + x];
      for (std::size_t z = 0; z < n && pseudo; ++z) pseudo = dw[x * n + z] <= dw[x * n + y] + dw[y * n + z];
      double s = 0.0;
      for (std::size_t i = 0; i < w.size(); ++i) s += (emb[x][i] - emb[y][i]) * (emb[x][i] - emb[y][i]);
      exact = exact && s == static_cast<double>(dw[x * n + y]);
    }
  }
  std::cout << "walls: " << w.size() << "\npairs: " << n * (n - 1) / 2 << "\nd_wall <= d_graph: " << (below ? "PASS" : "FAIL")
            << "\npseudometric: " << (pseudo ? "PASS" : "FAIL") << "\nembedding identity (exact): " << (exact ? "PASS" : "FAIL")
            << "\n";
  if (embed) {
    Eigen::MatrixXd pts(static_cast<long>(n), static_cast<long>(w.size()));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t i = 0; i < w.size(); ++i) pts(static_cast<long>(x), static_cast<long>(i)) = emb[x][i];
    Json maps{{"maps", Json::array({{{"source", graph_to_json(g)}, {"points", points_to_json(pts)}}})}};
    if (!io.out.empty()) write_output(io.out, dump(maps));
  } else if (!io.out.empty()) {
    Json rows = Json::array();
    for (std::size_t x = 0; x < n; ++x) rows.push_back(std::vector<std::uint32_t>(dw.begin() + x * n, dw.begin() + (x + 1) * n));
    write_output(io.out, dump({{"d_wall", rows}, {"below_graph_metric", below}, {"pseudometric", pseudo}, {"embedding_exact", exact}}));
  }
  return below && exact && pseudo ? 0 : 4;
}

int cmd_label(const Common& io, std::size_t alphabet, const std::string& lambda_text, std::uint64_t seed,
              std::size_t max_attempts) {
  const GraphDocument doc = parse_graph(read_input(io.in), io.parse());
  const GraphFamily fam = GraphFamily::from_graph(doc.graph);
  const Rational lambda = Rational::parse(lambda_text);
  const auto res = random_labeling(fam, alphabet, lambda, seed, max_attempts);
  std::cerr << "label: seed " << seed << ", " << res.attempts << " attempt(s), " << res.reduced_attempts << " reduced, "
            << (res.success ? "accepted" : "no C'(" + lambda.str() + ") labeling found") << "\n";
  if (!res.success) return 4;
  Json ann{{"labeling",
            {{"seed", seed}, {"lambda", lambda.str()}, {"alphabet_size", alphabet}, {"attempts", res.attempts},
             {"reduced_attempts", res.reduced_attempts}, {"max_piece_length", res.report->max_piece_length}}}};
  write_output(io.out, serialize_graph(res.family.disjoint_union(), ann));
  return 0;
}

int cmd_pieces(const Common& io, std::size_t max_length, std::size_t cap, const std::string& lambda_text) {
  const GraphDocument doc = parse_graph(read_input(io.in), io.parse());
  const GraphFamily fam = GraphFamily::from_graph(doc.graph);
  const Alphabet& a = doc.graph.alphabet();
  PieceOptions opts;
  opts.dart_cap = cap;
  opts.max_length = max_length;
  const auto pieces = enumerate_pieces(fam, opts);
  Json jp = Json::array();
  std::cout << "maximal pieces: " << pieces.size() << "\n";
  for (const auto& p : pieces) {
    std::cout << "  [" << p.length() << "] " << a.format(p.word) << " (" << p.occurrences.size() << " occurrences"
              << (p.at_length_bound ? ", at length bound" : "") << ")\n";
    Json occ = Json::array();
    for (const auto& o : p.occurrences) occ.push_back({{"component", o.component}, {"start", o.start}, {"darts", o.darts}});
    jp.push_back({{"word", a.format(p.word)}, {"length", p.length()}, {"at_length_bound", p.at_length_bound}, {"occurrences", occ}});
  }
  Json rep{{"pieces", jp}};
  int code = 0;
  if (!lambda_text.empty()) {
    const auto sc = check_small_cancellation(fam, Rational::parse(lambda_text), opts);
    Json girths = Json::array();
    for (const auto& gi : sc.girth) girths.push_back(optional_size(gi));
    rep["small_cancellation"] = {{"lambda", sc.lambda.str()}, {"girth", girths}, {"max_piece_length", sc.max_piece_length},
                                 {"reduced", sc.reduced}, {"pass", sc.pass}};
    std::cout << "C'(" << sc.lambda.str() << "): " << (sc.pass ? "PASS" : "FAIL") << "\n";
    if (!sc.pass) code = 4;
  }
  if (!io.out.empty()) write_output(io.out, dump(rep));
  return code;
}

int cmd_present(const Common& io, const std::vector<std::string>& quotient_files, bool order, std::size_t max_cosets) {
  const GraphDocument doc = parse_graph(read_input(io.in), io.parse());
  const GraphFamily fam = GraphFamily::from_graph(doc.graph);
  std::vector<Quotient> quotients;
  for (const auto& f : quotient_files) {
    const Json j = parse_json_text(read_input(f));
    quotients.push_back({group_from_json(j.at("group"), f + ".group"), j.at("images").get<std::vector<Element>>()});
  }
  const auto res = graphical_presentation(fam, quotients);
  const Alphabet& a = res.presentation.alphabet;
  std::cout << "< " << (a.size() ? "" : "(empty alphabet)");
  for (std::size_t i = 0; i < a.size(); ++i) std::cout << (i ? ", " : "") << a.name(i);
  std::cout << " | ";
  Json rel = Json::array();
  for (std::size_t i = 0; i < res.presentation.relators.size(); ++i) {
    const std::string w = a.format(res.presentation.relators[i]);
    std::cout << (i ? ", " : "") << w;
    rel.push_back(w);
  }
  std::cout << " >\n";
  Json rep{{"alphabet", a.names()}, {"relators", rel}};
  for (const auto& c : res.simple_cycle_checks)
    std::cout << "component " << c.component << ": " << c.cycles << " simple cycles, " << c.quotient_failures
              << " quotient failures\n";
  if (order) {
    const std::size_t n = coset_enumeration(a.size(), res.presentation.relators, {}, {max_cosets});
    std::cout << "group order (coset enumeration): " << n << "\n";
    rep["order"] = n;
  }
  if (!io.out.empty()) write_output(io.out, dump(rep));
  return res.pass ? 0 : 4;
}

int cmd_wreath(const Common& io, const std::string& qspec, const std::string& bspec, const std::string& proj_text,
               int radius, std::size_t cap) {
  FiniteGroupTable q = load_group(qspec), b = load_group(bspec);
  std::vector<Element> proj;
  if (proj_text == "id") {
    if (q.order() != b.order()) throw InputError("--proj id needs |Q| = |B|");
    for (Element x = 0; x < b.order(); ++x) proj.push_back(x);
  } else {
    proj = parse_list(proj_text);
  }
  const WreathGroup w(q, b, proj);
  WreathCayleyOptions opts;
  opts.vertex_cap = cap;
  if (radius >= 0) opts.radius = static_cast<std::size_t>(radius);
  const WreathCayley cay = wreath_cayley(w, opts);
  Json xs = Json::array();
  for (const auto& x : x_subset(w)) {
    const auto it = cay.index.find(x);
    xs.push_back(it == cay.index.end() ? Json(nullptr) : Json(it->second));
  }
  Json elems = Json::array();
  for (const auto& x : cay.elements) elems.push_back(w.format(x));
  Json ann{{"wreath",
            {{"q_table", group_to_json(q)}, {"b_table", group_to_json(b)}, {"proj", proj}, {"sigma", w.sigma_names()},
             {"x_subset", xs}, {"complete", cay.complete}}},
           {"vertex_labels", elems}};
  write_output(io.out, serialize_graph(cay.graph, ann));
  std::cerr << "wreath: " << cay.graph.vertex_count() << " vertices, " << cay.graph.edge_count() << " edges"
            << (cay.complete ? " (whole group)" : " (ball)") << "\n";
  return 0;
}

WreathGroup wreath_of(const GraphDocument& doc) {
  const auto it = doc.annotations.find("wreath");
  if (it == doc.annotations.end()) throw InputError("annotations.wreath: missing (not a wreath document)");
  return WreathGroup(group_from_json(it->at("q_table"), "wreath.q_table"), group_from_json(it->at("b_table"), "wreath.b_table"),
                     it->at("proj").get<std::vector<Element>>());
}

int cmd_poincare(const Common& io, bool relative, std::optional<std::uint64_t> seed, std::size_t trials) {
  if (!relative) throw InputError("poincare: only --relative is supported");
  if (trials > 0 && !seed) throw InputError("poincare: --seed is required when --trials > 0");
  const GraphDocument doc = parse_graph(read_input(io.in), io.parse());
  const WreathGroup w = wreath_of(doc);
  const FiniteGroupTable t = wreath_table(w);
  std::vector<Element> sigma = t.generators(), xs;
  const auto cay = wreath_cayley(w);
  for (const auto& x : x_subset(w)) xs.push_back(cay.index.at(x));
  const PoincareResult pr = relative_poincare_constant(t, sigma, xs);
  Json rep{{"constant", pr.constant},
           {"witness", std::vector<double>(pr.witness.data(), pr.witness.data() + pr.witness.size())},
           {"witness_lhs", pr.witness_lhs},
           {"witness_rhs", pr.witness_rhs},
           {"order", t.order()},
           {"sigma_size", sigma.size()},
           {"x_size", xs.size()},
           {"spectral_gap", spectral_gap(cayley_graph(t))},
           {"trials", trials},
           {"seed", seed ? Json(*seed) : Json(nullptr)}};
  std::cout << "order: " << t.order() << "\n|Sigma|: " << sigma.size() << "\n|X|: " << xs.size()
            << "\nrelative Poincare constant: " << fixed(pr.constant, 12) << "\n";
  int code = 0;
  if (trials > 0) {
    const auto vr = verify_relative_inequality(t, sigma, xs, pr.constant, trials, *seed);
    rep["worst_ratio"] = vr.worst_ratio;
    rep["violations"] = vr.violations;
    rep["degenerate"] = vr.degenerate;
    rep["worst_psi_ratio"] = vr.worst_psi_ratio;
    std::cout << "random trials: " << trials << ", violations " << vr.violations << ", worst ratio "
              << fixed(vr.worst_ratio, 12) << "\n";
    if (!vr.pass) code = 4;
  }
  write_output(io.out, dump(rep));
  return code;
}

MapFamily read_families(const std::vector<std::string>& inputs, const ParseOptions& po) {
  MapFamily fam;
  for (const auto& f : inputs) {
    auto part = parse_map_family(read_input(f), po);
    fam.insert(fam.end(), part.begin(), part.end());
  }
  return fam;
}

int cmd_weakembed(const Common& io, const std::vector<std::string>& inputs, double d) {
  const MapFamily fam = read_families(inputs.empty() ? std::vector<std::string>{"-"} : inputs, io.parse());
  const auto rep = is_weak_embedding(fam, d);
  for (std::size_t i = 0; i < fam.size(); ++i)
    std::cout << "index " << i << ": lipschitz " << fixed(rep.lipschitz[i]) << ", fiber fraction "
              << fixed(rep.fiber_fraction[i], 9) << "\n";
  std::cout << "weak embedding trend: " << (rep.pass ? "PASS" : "FAIL (" + rep.reason + ")") << "\n";
  if (!io.out.empty())
    write_output(io.out, dump({{"lipschitz", rep.lipschitz}, {"fiber_fraction", rep.fiber_fraction}, {"pass", rep.pass},
                               {"reason", rep.reason}}));
  return rep.pass ? 0 : 4;
}

int cmd_moduli(const Common& io, const std::vector<std::string>& inputs) {
  const MapFamily fam = read_families(inputs.empty() ? std::vector<std::string>{"-"} : inputs, io.parse());
  write_output(io.out, moduli_csv(compression_moduli(fam)));
  return 0;
}

int cmd_concentrate(const Common& io, double radius) {
  const MapFamily fam = parse_map_family(read_input(io.in), io.parse());
  const Json j = parse_json_text(read_input(io.in));
  Json rep = Json::array();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const auto& m = j.at("maps").at(i);
    if (!m.contains("points")) throw InputError("concentrate: maps[" + std::to_string(i) + "] has no points");
    const auto pts = points_from_json(m["points"], "points");
    const std::size_t c = ball_concentration(pts, radius);
    std::cout << "index " << i << ": " << c << " of " << pts.rows() << " points in one ball (radius " << radius
              << ", centers at image points, doubled radius)\n";
    rep.push_back({{"index", i}, {"count", c}, {"points", pts.rows()}, {"radius", radius}});
  }
  if (!io.out.empty()) write_output(io.out, dump(rep));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coarse_lab: expanders, covers with walls, small cancellation labelings and wreath products"};
  app.require_subcommand(1);
  std::function<int()> run;

  Common io;
  std::uint32_t p = 0, q = 0;
  bool allow_large = false;
  auto* lps = app.add_subcommand("lps", "LPS Ramanujan graph X^{p,q}");
  lps->add_option("--p", p, "prime p = 1 mod 4")->required();
  lps->add_option("--q", q, "prime q = 1 mod 4, (p|q) = -1")->required();
  lps->add_flag("--allow-large", allow_large, "permit q > 61");
  add_io(lps, io, false);
  lps->callback([&] { run = [&] { return cmd_lps(io, p, q, allow_large); }; });

  auto* spec = app.add_subcommand("spectrum", "adjacency spectrum, gap and Ramanujan margin");
  add_io(spec, io);
  spec->callback([&] { run = [&] { return cmd_spectrum(io); }; });

  std::size_t cheeger_cap = 20;
  auto* ch = app.add_subcommand("cheeger", "exact Cheeger constant per component");
  ch->add_option("--cap", cheeger_cap, "vertex enumeration cap");
  add_io(ch, io);
  ch->callback([&] { run = [&] { return cmd_cheeger(io, cheeger_cap); }; });

  auto* gi = app.add_subcommand("girth", "girth, diameter and diam/girth per component");
  add_io(gi, io);
  gi->callback([&] { run = [&] { return cmd_girth(io); }; });

  std::size_t iterations = 1, cover_cap = std::size_t{1} << 20;
  auto* cov = app.add_subcommand("cover", "iterated Z/2-homology cover");
  cov->add_option("--iterations", iterations, "number of homology covers to compose");
  cov->add_option("--cap", cover_cap, "vertex cap");
  add_io(cov, io);
  cov->callback([&] { run = [&] { return cmd_cover(io, iterations, cover_cap); }; });

  auto* wl = app.add_subcommand("walls", "walls of a cover document (edge fibers)");
  add_io(wl, io);
  wl->callback([&] { run = [&] { return cmd_walls(io); }; });

  Vertex basepoint = 0;
  bool embed = false;
  auto* wm = app.add_subcommand("wallmetric", "wall pseudometric and Hilbert embedding checks");
  wm->add_option("--basepoint", basepoint, "basepoint of the embedding");
  wm->add_flag("--embed", embed, "write the embedding as a maps document to --out");
  add_io(wm, io);
  wm->callback([&] { run = [&] { return cmd_wallmetric(io, basepoint, embed); }; });

  bool random = false;
  std::size_t alphabet = 2, max_attempts = 1000000;
  std::string lambda = "1/6";
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> opt_seed;
  auto* lb = app.add_subcommand("label", "random C'(lambda) labeling by rejection sampling");
  lb->add_flag("--random", random, "sample labels uniformly (the only mode)")->required();
  lb->add_option("--alphabet", alphabet, "alphabet size");
  lb->add_option("--lambda", lambda, "small cancellation parameter a/b");
  lb->add_option("--seed", seed, "random seed")->required();
  lb->add_option("--max-attempts", max_attempts, "attempt budget");
  add_io(lb, io);
  lb->callback([&] { run = [&] { return cmd_label(io, alphabet, lambda, seed, max_attempts); }; });

  std::size_t max_length = 0, dart_cap = 2000;
  std::string piece_lambda;
  auto* pc = app.add_subcommand("pieces", "maximal pieces and the C'(lambda) check");
  pc->add_option("--max-length", max_length, "longest word examined (0: total edge count)");
  pc->add_option("--cap", dart_cap, "dart cap");
  pc->add_option("--lambda", piece_lambda, "also check C'(lambda)");
  add_io(pc, io);
  pc->callback([&] { run = [&] { return cmd_pieces(io, max_length, dart_cap, piece_lambda); }; });

  std::vector<std::string> quotient_files;
  bool order = false;
  std::size_t max_cosets = std::size_t{1} << 21;
  auto* pr = app.add_subcommand("present", "graphical presentation from a cycle basis");
  pr->add_option("--quotient", quotient_files, "finite quotient document {group, images}");
  pr->add_flag("--order", order, "group order by coset enumeration");
  pr->add_option("--max-cosets", max_cosets, "coset table cap");
  add_io(pr, io);
  pr->callback([&] { run = [&] { return cmd_present(io, quotient_files, order, max_cosets); }; });

  std::string qtable, btable, proj = "id";
  int radius = -1;
  std::size_t wreath_cap = std::size_t{1} << 20;
  auto* wr = app.add_subcommand("wreath", "Cayley graph of Z/2 wr_Q B on {delta} u V");
  wr->add_option("--q-table", qtable, "group Q: JSON table file or cyclic:n, symmetric:n, dihedral:n, quaternion")->required();
  wr->add_option("--b-table", btable, "group B, same forms")->required();
  wr->add_option("--proj", proj, "projection B -> Q as a comma list, or id");
  wr->add_option("--radius", radius, "ball radius (default: whole group)");
  wr->add_option("--cap", wreath_cap, "vertex cap");
  add_io(wr, io, false);
  wr->callback([&] { run = [&] { return cmd_wreath(io, qtable, btable, proj, radius, wreath_cap); }; });

  bool relative = false;
  std::size_t trials = 0;
  auto* po = app.add_subcommand("poincare", "relative Poincare constant of a wreath document");
  po->add_flag("--relative", relative, "relative inequality with X = {delta_g}")->required();
  po->add_option("--seed", opt_seed, "seed for the random trials");
  po->add_option("--trials", trials, "random vector-valued functions to test");
  add_io(po, io);
  po->callback([&] { run = [&] { return cmd_poincare(io, relative, opt_seed, trials); }; });

  std::vector<std::string> inputs;
  double lipschitz = 1.0;
  auto* we = app.add_subcommand("weakembed", "weak embedding trend over a family of maps");
  we->add_option("--in", inputs, "maps or cover documents, in family order");
  we->add_option("--lipschitz", lipschitz, "Lipschitz bound D");
  add_io(we, io, false);
  we->callback([&] { run = [&] { return cmd_weakembed(io, inputs, lipschitz); }; });

  auto* mo = app.add_subcommand("moduli", "compression/expansion moduli as CSV");
  mo->add_option("--in", inputs, "maps or cover documents");
  add_io(mo, io, false);
  mo->callback([&] { run = [&] { return cmd_moduli(io, inputs); }; });

  double conc_radius = 0.0;
  auto* co = app.add_subcommand("concentrate", "largest number of points in one ball");
  co->add_option("--radius", conc_radius, "ball radius D")->required();
  add_io(co, io);
  co->callback([&] { run = [&] { return cmd_concentrate(io, conc_radius); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
