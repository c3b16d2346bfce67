#include "lcdkit/io.hpp"

#include <fstream>
#include <sstream>

namespace lcdkit::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError((where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

const Json* optional_field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return nullptr;
  return &*it;
}

std::string string_of(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

long long integer_of(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long long>();
}

const Json& array_of(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }
std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }

Json names(const Simplex& s) {
  Json out = Json::array();
  for (const auto& v : s) out.push_back(v.name());
  return out;
}

std::vector<Simplex> simplex_list(const Json& j, const std::string& where) {
  std::vector<Simplex> out;
  const auto& arr = array_of(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(simplex_from_json(arr[i], at(where, i)));
  return out;
}

std::map<VertexId, VertexId> vertex_map_of(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  std::map<VertexId, VertexId> out;
  for (const auto& [k, v] : j.items()) out.emplace(VertexId(k), VertexId(string_of(v, at(where, k))));
  return out;
}

Json vertex_map_json(const std::map<VertexId, VertexId>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[k.name()] = v.name();
  return out;
}

std::string with_source(std::string_view source, const std::string& msg) {
  return std::string(source) + ": " + msg;
}

}  // namespace

Simplex simplex_from_json(const Json& j, const std::string& where) {
  const auto& arr = array_of(j, where);
  if (arr.empty()) fail(where, "a simplex needs at least one vertex");
  std::vector<VertexId> vs;
  std::set<VertexId> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    vs.emplace_back(string_of(arr[i], at(where, i)));
    if (!seen.insert(vs.back()).second) fail(at(where, i), "repeated vertex " + vs.back().name() + " in simplex");
  }
  return Simplex(vs);
}

Json to_json(const std::vector<Simplex>& simplices) {
  std::vector<Simplex> sorted = simplices;
  std::sort(sorted.begin(), sorted.end());
  Json out = Json::array();
  for (const auto& s : sorted) out.push_back(names(s));
  return out;
}

Json to_json(const SimplicialComplex& k) {
  Json vs = Json::array();
  for (const auto& v : k.vertices()) vs.push_back(v.name());
  return Json{{"dim", k.dim()}, {"vertices", vs}, {"maximal_simplices", to_json(k.maximal_simplices())}};
}

SimplicialComplex complex_from_json(const Json& j, const std::string& where) {
  const auto& vj = array_of(field(j, "vertices", where), at(where, "vertices"));
  std::vector<VertexId> vertices;
  std::set<VertexId> listed;
  for (std::size_t i = 0; i < vj.size(); ++i) {
    vertices.emplace_back(string_of(vj[i], at(at(where, "vertices"), i)));
    if (!listed.insert(vertices.back()).second) {
      fail(at(at(where, "vertices"), i), "duplicate vertex " + vertices.back().name());
    }
  }
  const auto ms_where = at(where, "maximal_simplices");
  const auto simplices = simplex_list(field(j, "maximal_simplices", where), ms_where);
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    for (const auto& v : simplices[i]) {
      if (!listed.contains(v)) fail(at(ms_where, i), "vertex " + v.name() + " is not listed in \"vertices\"");
    }
  }
  auto k = SimplicialComplex::from_simplices(simplices, vertices);
  const auto d = integer_of(field(j, "dim", where), at(where, "dim"));
  if (d != k.dim()) {
    fail(at(where, "dim"), "declared dimension " + std::to_string(d) + " but the simplices have dimension " +
                               std::to_string(k.dim()));
  }
  return k;
}

Json to_json(const Labeling& l) {
  Json vl = Json::object();
  for (const auto& [v, s] : l.vertex_labels) vl[v.name()] = s;
  Json sl = Json::array();
  for (const auto& [s, lab] : l.simplex_labels) sl.push_back(Json{{"simplex", names(s)}, {"label", lab}});
  return Json{{"vertex_labels", vl}, {"simplex_labels", sl}};
}

Labeling labeling_from_json(const Json& j, const std::string& where) {
  Labeling l;
  if (const auto* vl = optional_field(j, "vertex_labels", where)) {
    const auto w = at(where, "vertex_labels");
    if (!vl->is_object()) fail(w, "expected an object");
    for (const auto& [k, v] : vl->items()) l.vertex_labels.emplace(VertexId(k), string_of(v, at(w, k)));
  }
  if (const auto* sl = optional_field(j, "simplex_labels", where)) {
    const auto w = at(where, "simplex_labels");
    const auto& arr = array_of(*sl, w);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto e = at(w, i);
      const auto s = simplex_from_json(field(arr[i], "simplex", e), at(e, "simplex"));
      if (!l.simplex_labels.emplace(s, string_of(field(arr[i], "label", e), at(e, "label"))).second) {
        fail(e, "simplex " + to_string(s) + " is labeled twice");
      }
    }
  }
  return l;
}

Json to_json(const LocalModel& m) {
  Json out{{"complex", to_json(m.complex)}, {"center", m.center.name()}, {"dim", m.dim}};
  if (m.labeling) out["labeling"] = to_json(*m.labeling);
  return out;
}

LocalModel model_from_json(const Json& j, const std::string& where) {
  LocalModel m{complex_from_json(field(j, "complex", where), at(where, "complex")),
               VertexId(string_of(field(j, "center", where), at(where, "center"))), std::nullopt, 0};
  if (!m.complex.contains(m.center)) fail(at(where, "center"), "center " + m.center.name() + " is not a vertex");
  m.dim = m.complex.dim();
  if (const auto* d = optional_field(j, "dim", where)) m.dim = static_cast<int>(integer_of(*d, at(where, "dim")));
  if (const auto* l = optional_field(j, "labeling", where)) {
    m.labeling = labeling_from_json(*l, at(where, "labeling"));
    try {
      m.labeling->check_domain(m.complex);
    } catch (const Error& e) {
      fail(at(where, "labeling"), e.what());
    }
  }
  return m;
}

Json to_json(const ModelSet& ms) {
  Json models = Json::array();
  for (const auto& m : ms.models) models.push_back(to_json(m));
  return Json{{"dim", ms.dim}, {"models", models}};
}

ModelSet model_set_from_json(const Json& j, const std::string& where) {
  ModelSet ms;
  ms.dim = static_cast<int>(integer_of(field(j, "dim", where), at(where, "dim")));
  const auto w = at(where, "models");
  const auto& arr = array_of(field(j, "models", where), w);
  for (std::size_t i = 0; i < arr.size(); ++i) ms.models.push_back(model_from_json(arr[i], at(w, i)));
  try {
    ms.check();
  } catch (const Error& e) {
    fail(where, e.what());
  }
  return ms;
}

Json to_json(const BranchedManifold& w) {
  Json ps = Json::array();
  for (const auto& p : w.projections) {
    Json sheets = Json::array();
    for (const auto& s : p.sheets) sheets.push_back(to_json(s.maximal_simplices()));
    ps.push_back(Json{{"domain_maximal", to_json(p.domain.maximal_simplices())},
                      {"chart", to_json(p.chart)},
                      {"vertex_map", vertex_map_json(p.vertex_map)},
                      {"sheets", sheets}});
  }
  return Json{{"dim", w.dim}, {"complex", to_json(w.complex)}, {"projections", ps}};
}

BranchedManifold branched_from_json(const Json& j, const std::string& where) {
  BranchedManifold w;
  w.complex = complex_from_json(field(j, "complex", where), at(where, "complex"));
  w.dim = w.complex.dim();
  if (const auto* d = optional_field(j, "dim", where)) w.dim = static_cast<int>(integer_of(*d, at(where, "dim")));
  const auto pw = at(where, "projections");
  const auto& arr = array_of(field(j, "projections", where), pw);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto e = at(pw, i);
    LocalProjection p;
    p.domain = SimplicialComplex::from_simplices(
        simplex_list(field(arr[i], "domain_maximal", e), at(e, "domain_maximal")));
    p.chart = complex_from_json(field(arr[i], "chart", e), at(e, "chart"));
    p.vertex_map = vertex_map_of(field(arr[i], "vertex_map", e), at(e, "vertex_map"));
    for (const auto& v : p.domain.vertices()) {
      const auto it = p.vertex_map.find(v);
      if (it == p.vertex_map.end()) fail(at(e, "vertex_map"), "domain vertex " + v.name() + " is not mapped");
      if (!p.chart.contains(it->second)) {
        fail(at(at(e, "vertex_map"), v.name()), it->second.name() + " is not a chart vertex");
      }
    }
    const auto sw = at(e, "sheets");
    const auto& sheets = array_of(field(arr[i], "sheets", e), sw);
    for (std::size_t s = 0; s < sheets.size(); ++s) {
      p.sheets.push_back(SimplicialComplex::from_simplices(simplex_list(sheets[s], at(sw, s))));
    }
    w.projections.push_back(std::move(p));
  }
  return w;
}

Json to_json(const Immersion& f) {
  Json wit = Json::object();
  for (const auto& [v, i] : f.witnesses) wit[v.name()] = i;
  return Json{{"vertex_map", vertex_map_json(f.map.vertex_map())}, {"witnesses", wit}};
}

Immersion immersion_from_json(const Json& j, const SimplicialComplex& m, const BranchedManifold& w,
                              const std::string& where) {
  auto map = vertex_map_of(field(j, "vertex_map", where), at(where, "vertex_map"));
  if (!is_simplicial(m, w.complex, map)) fail(at(where, "vertex_map"), "not a simplicial map into the target");
  std::map<VertexId, std::size_t> witnesses;
  if (const auto* wj = optional_field(j, "witnesses", where)) {
    const auto ww = at(where, "witnesses");
    if (!wj->is_object()) fail(ww, "expected an object");
    for (const auto& [k, v] : wj->items()) {
      const auto i = integer_of(v, at(ww, k));
      if (i < 0 || static_cast<std::size_t>(i) >= w.projections.size()) fail(at(ww, k), "no such projection");
      witnesses.emplace(VertexId(k), static_cast<std::size_t>(i));
    }
  }
  return Immersion{SimplicialMap(m, w.complex, std::move(map)), std::move(witnesses)};
}

Json to_json(const MonodromyWord& w) {
  Json letters = Json::array();
  for (auto l : w.letters) letters.push_back(std::string(to_string(l)));
  return Json{{"letters", letters}};
}

MonodromyWord word_from_json(const Json& j, const std::string& where) {
  MonodromyWord w;
  const auto lw = at(where, "letters");
  const auto& arr = array_of(field(j, "letters", where), lw);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    try {
      w.letters.push_back(parse_letter(string_of(arr[i], at(lw, i))));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(at(lw, i), e.what());
    }
  }
  return w;
}

Json to_json(const Matrix2Z& m) { return Json{{"rows", Json{Json{m.a, m.b}, Json{m.c, m.d}}}}; }

Matrix2Z matrix_from_json(const Json& j, const std::string& where) {
  const auto rw = at(where, "rows");
  const auto& rows = array_of(field(j, "rows", where), rw);
  if (rows.size() != 2) fail(rw, "expected two rows");
  long long e[4];
  for (std::size_t r = 0; r < 2; ++r) {
    const auto& row = array_of(rows[r], at(rw, r));
    if (row.size() != 2) fail(at(rw, r), "expected two entries");
    for (std::size_t c = 0; c < 2; ++c) e[2 * r + c] = integer_of(row[c], at(at(rw, r), c));
  }
  return {e[0], e[1], e[2], e[3]};
}

Json to_json(const Coloring& c) {
  Json colors = Json::object();
  for (const auto& [v, col] : c.colors) colors[v.name()] = col;
  return Json{{"radius", c.radius}, {"colors", colors}};
}

Coloring coloring_from_json(const Json& j, const std::string& where) {
  Coloring c;
  const auto r = integer_of(field(j, "radius", where), at(where, "radius"));
  if (r < 0) fail(at(where, "radius"), "radius must be non-negative");
  c.radius = static_cast<std::size_t>(r);
  const auto cw = at(where, "colors");
  const auto& cj = field(j, "colors", where);
  if (!cj.is_object()) fail(cw, "expected an object");
  for (const auto& [k, v] : cj.items()) c.colors.emplace(VertexId(k), static_cast<Color>(integer_of(v, at(cw, k))));
  return c;
}

Json to_json(const SimplexClass& c) {
  Json vl = Json::array();
  for (const auto& l : c.vertex_labels) vl.push_back(l ? Json(*l) : Json(nullptr));
  return Json{{"vertex_labels", vl}, {"simplex_label", c.simplex_label ? Json(*c.simplex_label) : Json(nullptr)}};
}

SimplexClass simplex_class_from_json(const Json& j, const std::string& where) {
  SimplexClass c;
  const auto vw = at(where, "vertex_labels");
  const auto& arr = array_of(field(j, "vertex_labels", where), vw);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (arr[i].is_null()) {
      c.vertex_labels.emplace_back();
    } else {
      c.vertex_labels.emplace_back(string_of(arr[i], at(vw, i)));
    }
  }
  if (const auto* s = optional_field(j, "simplex_label", where)) c.simplex_label = string_of(*s, at(where, "simplex_label"));
  return c;
}

Json to_json(const UniversalBuild& b) {
  Json witnesses = Json::array();
  for (const auto& w : b.witnesses) witnesses.push_back(to_json(w));
  Json theta = Json::array();
  for (const auto& t : b.theta) theta.push_back(to_json(t));
  Json geos = Json::array();
  for (std::size_t k = 0; k < b.geographies.geographies.size(); ++k) {
    const auto& g = b.geographies.geographies[k];
    geos.push_back(Json{{"vertex", geography_vertex(k).name()}, {"center_color", g.center_color}, {"chart", to_json(g.chart)}});
  }
  Json warnings = Json::array();
  for (const auto& w : b.report.warnings) warnings.push_back(w);
  return Json{{"radius", b.radius},
              {"models", to_json(b.models)},
              {"witnesses", witnesses},
              {"coloring", to_json(b.coloring)},
              {"geographies", geos},
              {"psi", b.psi},
              {"branched", to_json(b.w)},
              {"theta", theta},
              {"warnings", warnings}};
}

Document parse_document(std::string_view text, std::string_view source) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    const auto pos = what.find("syntax error");
    if (pos != std::string::npos) what = what.substr(pos);
    throw ParseError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
  try {
    const auto v = integer_of(field(j, "format_version", ""), "/format_version");
    if (v != format_version) {
      fail("/format_version", "unsupported format version " + std::to_string(v) + " (expected " +
                                  std::to_string(format_version) + ")");
    }
    Document doc{string_of(field(j, "kind", ""), "/kind"), field(j, "payload", "")};
    return doc;
  } catch (const ParseError& e) {
    throw ParseError(with_source(source, e.what()));
  }
}

Document read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

std::string serialize(const Document& doc) {
  const Json j{{"format_version", format_version}, {"kind", doc.kind}, {"payload", doc.payload}};
  return j.dump(2) + "\n";
}

void expect_kind(const Document& doc, std::initializer_list<std::string_view> kinds, std::string_view source) {
  std::string list;
  for (const auto k : kinds) {
    if (doc.kind == k) return;
    if (!list.empty()) list += ", ";
    list += k;
  }
  throw ParseError(with_source(source, "/kind: expected " + list + ", got \"" + doc.kind + "\""));
}

namespace {

template <class F>
auto located(std::string_view source, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(with_source(source, e.what()));
  }
}

}  // namespace

SimplicialComplex as_complex(const Document& doc, std::string_view source) {
  expect_kind(doc, {"complex"}, source);
  return located(source, [&] { return complex_from_json(doc.payload, "/payload"); });
}

ModelSet as_model_set(const Document& doc, std::string_view source) {
  expect_kind(doc, {"model-set", "model"}, source);
  return located(source, [&] {
    if (doc.kind == "model-set") return model_set_from_json(doc.payload, "/payload");
    auto m = model_from_json(doc.payload, "/payload");
    const int dim = m.dim;
    return ModelSet{{std::move(m)}, dim};
  });
}

BranchedManifold as_branched(const Document& doc, std::string_view source) {
  expect_kind(doc, {"branched", "build"}, source);
  return located(source, [&] {
    if (doc.kind == "build") return branched_from_json(field(doc.payload, "branched", "/payload"), "/payload/branched");
    return branched_from_json(doc.payload, "/payload");
  });
}

}  // namespace lcdkit::io
