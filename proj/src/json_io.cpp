#include "coarse/json_io.hpp"

#include <algorithm>
#include <set>

#include "coarse/errors.hpp"
#include "coarse/graph_metrics.hpp"

namespace coarse {

namespace {

void check_keys(const Json& j, const std::string& where, std::initializer_list<const char*> allowed,
                const ParseOptions& options) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  if (!options.strict) return;
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; }))
      throw InputError(where + ": unknown field '" + it.key() + "'");
}

const Json& field(const Json& j, const std::string& where, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

std::uint64_t natural(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw InputError(where + ": expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

template <typename T>
std::vector<T> natural_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  std::vector<T> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(static_cast<T>(natural(j[i], where + "[" + std::to_string(i) + "]")));
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json graph_to_json(const LabeledGraph& g, const Json& annotations) {
  Json edges = Json::array();
  for (const EdgeSpec& e : g.edge_specs()) {
    Json je{{"u", e.u}, {"v", e.v}};
    if (e.label.is_none()) {
      je["label"] = nullptr;
      je["orientation"] = 0;
    } else {
      je["label"] = g.alphabet().name(e.label.symbol());
      je["orientation"] = e.label.inverted() ? -1 : 1;
    }
    edges.push_back(std::move(je));
  }
  Json out{{"format_version", "1"},
           {"alphabet", g.alphabet().names()},
           {"vertices", g.vertex_count()},
           {"edges", std::move(edges)}};
  out["annotations"] = annotations.is_null() ? Json::object() : annotations;
  return out;
}

std::string serialize_graph(const LabeledGraph& g, const Json& annotations) { return dump(graph_to_json(g, annotations)); }

GraphDocument graph_from_json(const Json& j, const ParseOptions& options) {
  const std::string where = "graph";
  check_keys(j, where, {"format_version", "alphabet", "vertices", "edges", "annotations"}, options);
  const Json& version = field(j, where, "format_version");
  if (!version.is_string() || version.get<std::string>() != "1")
    throw InputError("graph.format_version: unsupported version (expected \"1\")");
  const Json& alpha = field(j, where, "alphabet");
  if (!alpha.is_array()) throw InputError("graph.alphabet: expected an array of strings");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!alpha[i].is_string()) throw InputError("graph.alphabet[" + std::to_string(i) + "]: expected a string");
    names.push_back(alpha[i].get<std::string>());
  }
  Alphabet alphabet;
  try {
    alphabet = names.empty() ? Alphabet() : Alphabet(names);
  } catch (const Error& e) {
    throw InputError(std::string("graph.alphabet: ") + e.what());
  }
  const std::size_t n = natural(field(j, where, "vertices"), "graph.vertices");
  const Json& edges = field(j, where, "edges");
  if (!edges.is_array()) throw InputError("graph.edges: expected an array");
  std::vector<EdgeSpec> specs;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string ew = "graph.edges[" + std::to_string(i) + "]";
    const Json& e = edges[i];
    check_keys(e, ew, {"u", "v", "label", "orientation"}, options);
    EdgeSpec s;
    s.u = static_cast<Vertex>(natural(field(e, ew, "u"), ew + ".u"));
    s.v = static_cast<Vertex>(natural(field(e, ew, "v"), ew + ".v"));
    for (Vertex x : {s.u, s.v})
      if (x >= n)
        throw InputError(ew + ": vertex " + std::to_string(x) + " out of range (" + std::to_string(n) + " vertices)");
    const auto label = e.find("label");
    const auto orient = e.find("orientation");
    if (label == e.end() || label->is_null()) {
      if (orient != e.end() && !(orient->is_number_integer() && orient->get<int>() == 0))
        throw InputError(ew + ".orientation: must be 0 for an unlabeled edge");
      s.label = Letter::none();
    } else {
      if (!label->is_string()) throw InputError(ew + ".label: expected a string");
      const long sym = alphabet.find(label->get<std::string>());
      if (sym < 0) throw InputError(ew + ".label: '" + label->get<std::string>() + "' is not in the alphabet");
      int o = 1;
      if (orient != e.end()) {
        if (!orient->is_number_integer() || (orient->get<int>() != 1 && orient->get<int>() != -1))
          throw InputError(ew + ".orientation: expected 1 or -1");
        o = orient->get<int>();
      }
      s.label = Letter(static_cast<std::uint32_t>(sym), o == -1);
    }
    specs.push_back(s);
  }
  GraphDocument doc;
  doc.graph = LabeledGraph(alphabet, n, specs);
  if (const auto a = j.find("annotations"); a != j.end()) {
    if (!a->is_object()) throw InputError("graph.annotations: expected an object");
    doc.annotations = *a;
  }
  return doc;
}

GraphDocument parse_graph(const std::string& text, const ParseOptions& options) {
  return graph_from_json(parse_json_text(text), options);
}

Json family_metadata_json(const GraphFamily& fam) {
  Json out = Json::array();
  for (const auto& m : fam.metadata)
    out.push_back({{"girth", m.girth ? Json(*m.girth) : Json(nullptr)}, {"diameter", m.diameter}, {"size", m.size}});
  return out;
}

GraphFamily parse_graph_family(const std::string& text, const ParseOptions& options) {
  const GraphDocument doc = parse_graph(text, options);
  GraphFamily fam = GraphFamily::from_graph(doc.graph);
  if (const auto it = doc.annotations.find("components"); it != doc.annotations.end()) {
    if (!it->is_array() || it->size() != fam.size())
      throw InputError("annotations.components: expected one entry per component (" + std::to_string(fam.size()) + ")");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string w = "annotations.components[" + std::to_string(i) + "]";
      const Json& c = (*it)[i];
      check_keys(c, w, {"girth", "diameter", "size"}, options);
      ComponentMetadata m;
      const Json& gi = field(c, w, "girth");
      if (!gi.is_null()) m.girth = natural(gi, w + ".girth");
      m.diameter = natural(field(c, w, "diameter"), w + ".diameter");
      m.size = natural(field(c, w, "size"), w + ".size");
      fam.metadata.push_back(m);
    }
    if (!fam.metadata_consistent()) throw InputError("annotations.components: metadata disagrees with the graph");
  }
  return fam;
}

Json group_to_json(const FiniteGroupTable& g) {
  Json rows = Json::array();
  for (Element a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (Element b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    rows.push_back(std::move(row));
  }
  Json out{{"order", g.order()}, {"mul", std::move(rows)}, {"generators", g.generators()}};
  if (!g.element_names().empty()) out["names"] = g.element_names();
  return out;
}

FiniteGroupTable group_from_json(const Json& j, const std::string& where) {
  check_keys(j, where, {"order", "mul", "generators", "names"}, {});
  const std::size_t n = natural(field(j, where, "order"), where + ".order");
  const Json& mul = field(j, where, "mul");
  if (!mul.is_array() || mul.size() != n) throw InputError(where + ".mul: expected " + std::to_string(n) + " rows");
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto row = natural_list<Element>(mul[a], where + ".mul[" + std::to_string(a) + "]");
    if (row.size() != n) throw InputError(where + ".mul[" + std::to_string(a) + "]: wrong length");
    for (Element x : row)
      if (x >= n) throw InputError(where + ".mul[" + std::to_string(a) + "]: entry out of range");
    table.insert(table.end(), row.begin(), row.end());
  }
  const auto gens = natural_list<Element>(field(j, where, "generators"), where + ".generators");
  std::vector<std::string> names;
  if (const auto it = j.find("names"); it != j.end()) {
    if (!it->is_array() || it->size() != n) throw InputError(where + ".names: expected one name per element");
    for (const auto& s : *it) {
      if (!s.is_string()) throw InputError(where + ".names: expected strings");
      names.push_back(s.get<std::string>());
    }
  }
  try {
    return FiniteGroupTable(n, std::move(table), gens, std::move(names));
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

Json covering_to_json(const CoveringMap& cm) {
  Json fibers = Json::array();
  std::vector<std::vector<Vertex>> fib(cm.base.vertex_count());
  for (Vertex x = 0; x < cm.vertex_map.size(); ++x) fib[cm.vertex_map[x]].push_back(x);
  for (const auto& f : fib) fibers.push_back(f);
  return {{"base", graph_to_json(cm.base)},
          {"vertex_map", cm.vertex_map},
          {"dart_map", cm.dart_map},
          {"deck_rank", cm.deck_rank},
          {"flip_edges", cm.flip_edges},
          {"fibers", std::move(fibers)}};
}

CoveringMap covering_from_document(const GraphDocument& doc, const ParseOptions& options) {
  const auto it = doc.annotations.find("covering");
  if (it == doc.annotations.end()) throw InputError("annotations.covering: missing (not a cover document)");
  const std::string w = "annotations.covering";
  const Json& c = *it;
  check_keys(c, w, {"base", "vertex_map", "dart_map", "deck_rank", "flip_edges", "fibers"}, options);
  CoveringMap cm;
  cm.base = graph_from_json(field(c, w, "base"), options).graph;
  cm.cover = doc.graph;
  cm.vertex_map = natural_list<Vertex>(field(c, w, "vertex_map"), w + ".vertex_map");
  cm.dart_map = natural_list<DartId>(field(c, w, "dart_map"), w + ".dart_map");
  cm.deck_rank = natural(field(c, w, "deck_rank"), w + ".deck_rank");
  if (const auto f = c.find("flip_edges"); f != c.end()) cm.flip_edges = natural_list<EdgeId>(*f, w + ".flip_edges");
  if (cm.vertex_map.size() != cm.cover.vertex_count() || cm.dart_map.size() != cm.cover.dart_count())
    throw InputError(w + ": map sizes do not match the cover");
  for (Vertex v : cm.vertex_map)
    if (v >= cm.base.vertex_count()) throw InputError(w + ".vertex_map: value out of range");
  for (DartId d : cm.dart_map)
    if (d >= cm.base.dart_count()) throw InputError(w + ".dart_map: value out of range");
  if (cm.deck_rank >= 63 || cm.base.vertex_count() << cm.deck_rank != cm.cover.vertex_count())
    throw InputError(w + ".deck_rank: inconsistent with the vertex counts");
  if (!is_local_isomorphism(cm)) throw InputError(w + ": the maps are not a local isomorphism");
  if (const auto f = c.find("fibers"); f != c.end()) {
    if (!f->is_array() || f->size() != cm.base.vertex_count()) throw InputError(w + ".fibers: one list per base vertex");
    for (Vertex v = 0; v < cm.base.vertex_count(); ++v)
      if (natural_list<Vertex>((*f)[v], w + ".fibers") != cm.fiber(v))
        throw InputError(w + ".fibers[" + std::to_string(v) + "]: disagrees with vertex_map");
  }
  return cm;
}

Json walls_to_json(const WallDecomposition& w) { return {{"walls", w.walls}, {"sides", w.sides}}; }

WallDecomposition walls_from_json(const Json& j) {
  check_keys(j, "walls", {"walls", "sides"}, {});
  WallDecomposition w;
  const Json& walls = field(j, "walls", "walls");
  const Json& sides = field(j, "walls", "sides");
  if (!walls.is_array() || !sides.is_array() || walls.size() != sides.size())
    throw InputError("walls: 'walls' and 'sides' must be arrays of equal length");
  for (std::size_t i = 0; i < walls.size(); ++i) {
    w.walls.push_back(natural_list<EdgeId>(walls[i], "walls.walls[" + std::to_string(i) + "]"));
    w.sides.push_back(natural_list<std::uint8_t>(sides[i], "walls.sides[" + std::to_string(i) + "]"));
  }
  return w;
}

Json points_to_json(const Eigen::MatrixXd& points) {
  Json out = Json::array();
  for (long i = 0; i < points.rows(); ++i) {
    Json row = Json::array();
    for (long k = 0; k < points.cols(); ++k) row.push_back(points(i, k));
    out.push_back(std::move(row));
  }
  return out;
}

Eigen::MatrixXd points_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a nonempty array of points");
  const std::size_t d = j[0].is_array() ? j[0].size() : 0;
  if (d == 0) throw InputError(where + ": points must be nonempty arrays of numbers");
  Eigen::MatrixXd p(static_cast<long>(j.size()), static_cast<long>(d));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != d)
      throw InputError(where + "[" + std::to_string(i) + "]: expected " + std::to_string(d) + " coordinates");
    for (std::size_t k = 0; k < d; ++k) {
      if (!j[i][k].is_number()) throw InputError(where + "[" + std::to_string(i) + "]: coordinates must be numbers");
      p(static_cast<long>(i), static_cast<long>(k)) = j[i][k].get<double>();
    }
  }
  return p;
}

MapFamily parse_map_family(const std::string& text, const ParseOptions& options) {
  const Json j = parse_json_text(text);
  MapFamily fam;
  if (j.is_object() && j.contains("format_version")) {
    const GraphDocument doc = graph_from_json(j, options);
    const CoveringMap cm = covering_from_document(doc, options);
    fam.push_back(MapInstance::into_graph(cm.cover, cm.base, cm.vertex_map));
    return fam;
  }
  check_keys(j, "maps document", {"maps"}, options);
  const Json& maps = field(j, "maps document", "maps");
  if (!maps.is_array()) throw InputError("maps: expected an array");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const std::string w = "maps[" + std::to_string(i) + "]";
    check_keys(maps[i], w, {"source", "points", "target", "vertex_map"}, options);
    const LabeledGraph source = graph_from_json(field(maps[i], w, "source"), options).graph;
    if (maps[i].contains("points")) {
      fam.push_back(MapInstance::into_points(source, points_from_json(maps[i]["points"], w + ".points")));
    } else {
      const LabeledGraph target = graph_from_json(field(maps[i], w, "target"), options).graph;
      fam.push_back(
          MapInstance::into_graph(source, target, natural_list<Vertex>(field(maps[i], w, "vertex_map"), w + ".vertex_map")));
    }
  }
  return fam;
}

}  // namespace coarse
