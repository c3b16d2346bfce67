#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "lcdkit/catalog.hpp"
#include "lcdkit/io.hpp"

using namespace lcdkit;
using io::Json;

namespace {

enum Exit { affirmative = 0, negative = 1, input_error = 2, internal_error = 3 };

/// Command-line input: "catalog:<name>", "-" for stdin, or a file path. A
/// report document is replaced by the result it carries.
io::Document load(const std::string& spec) {
  io::Document doc;
  if (spec.rfind("catalog:", 0) == 0) {
    doc = io::Document{"complex", io::to_json(catalog::by_name(spec.substr(8)))};
  } else if (spec == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    doc = io::parse_document(ss.str(), "<stdin>");
  } else {
    doc = io::read_document(spec);
  }
  if (doc.kind == "report" && doc.payload.is_object() && doc.payload.contains("result")) {
    const auto& r = doc.payload["result"];
    if (!r.is_object() || !r.contains("kind") || !r.contains("payload") || !r["kind"].is_string()) {
      throw io::ParseError(spec + ": /payload/result: expected {\"kind\", \"payload\"}");
    }
    doc = io::Document{r["kind"].get<std::string>(), r["payload"]};
  }
  return doc;
}

SimplicialComplex load_complex(const std::string& spec) { return io::as_complex(load(spec), spec); }
ModelSet load_models(const std::string& spec) { return io::as_model_set(load(spec), spec); }

Simplex parse_simplex_arg(const std::string& text) {
  std::vector<VertexId> vs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) vs.emplace_back(item);
  }
  if (vs.empty()) throw Error("empty simplex argument '" + text + "'");
  return Simplex(vs);
}

std::vector<VertexId> parse_vertex_list(const std::string& text) {
  std::vector<VertexId> vs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) vs.emplace_back(item);
  }
  return vs;
}

MonodromyWord load_word(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    const auto doc = load(arg);
    io::expect_kind(doc, {"word"}, arg);
    return io::word_from_json(doc.payload, "/payload");
  }
  return MonodromyWord::parse(arg);
}

Matrix2Z load_matrix(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    const auto doc = load(arg);
    io::expect_kind(doc, {"matrix"}, arg);
    return io::matrix_from_json(doc.payload, "/payload");
  }
  std::vector<long long> e;
  const std::regex num("-?[0-9]+");
  for (auto it = std::sregex_iterator(arg.begin(), arg.end(), num); it != std::sregex_iterator(); ++it) {
    e.push_back(std::stoll(it->str()));
  }
  if (e.size() != 4) throw Error("matrix argument '" + arg + "' must contain four integers a,b,c,d");
  return {e[0], e[1], e[2], e[3]};
}

struct Output {
  std::string path;

  void write(const io::Document& doc) const {
    const auto text = io::serialize(doc);
    if (path.empty() || path == "-") {
      std::cout << text;
    } else {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw Error("cannot write " + path);
      out << text;
    }
  }
};

/// Report document: the command, its exact parameters, a one-word answer
/// and an optional typed result.
io::Document report(const std::string& command, Json parameters, const std::string& answer, Json details = Json::object(),
                    const std::string& result_kind = "", Json result = nullptr) {
  Json p{{"command", command}, {"parameters", std::move(parameters)}, {"answer", answer}, {"details", std::move(details)}};
  if (!result_kind.empty()) p["result"] = Json{{"kind", result_kind}, {"payload", std::move(result)}};
  return io::Document{"report", std::move(p)};
}

Json names(const std::vector<std::string>& v) { return Json(v); }

Json family_json(const StandardSubdivisionFamily& fam) {
  Json classes = Json::array();
  Json entries = Json::array();
  for (const auto& e : fam.entries) {
    classes.push_back(io::to_json(e.key));
    entries.push_back(Json{{"class", e.key.to_string()}, {"N", e.big_n}, {"boundary_degrees", e.boundary_degrees}});
  }
  return Json{{"dim", fam.dim}, {"classes", classes}, {"lambda", fam.lambda}, {"entries", entries}};
}

StandardSubdivisionFamily family_from_json(const Json& j) {
  const int dim = static_cast<int>(j.at("dim").get<long long>());
  std::vector<SimplexClass> classes;
  const auto& arr = j.at("classes");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    classes.push_back(io::simplex_class_from_json(arr[i], "/payload/family/classes/" + std::to_string(i)));
  }
  return build_family(dim, classes);
}

struct LabeledInput {
  SimplicialComplex complex;
  Labeling labeling;
};

LabeledInput load_labeled(const std::string& spec, const std::string& labels_spec) {
  auto doc = load(spec);
  LabeledInput in;
  if (doc.kind == "labeled-complex") {
    in.complex = io::complex_from_json(doc.payload.at("complex"), "/payload/complex");
    in.labeling = io::labeling_from_json(doc.payload.at("labeling"), "/payload/labeling");
  } else {
    in.complex = io::as_complex(doc, spec);
  }
  if (!labels_spec.empty()) {
    const auto ldoc = load(labels_spec);
    io::expect_kind(ldoc, {"labeling"}, labels_spec);
    in.labeling = io::labeling_from_json(ldoc.payload, "/payload");
  }
  in.labeling.check_domain(in.complex);
  return in;
}

Json certificate_json(const ModelingCertificate& cert) {
  Json matches = Json::object();
  for (const auto& [v, m] : cert.matches) {
    Json emb = Json::object();
    for (const auto& [a, b] : m.embedding.vertex_map()) emb[a.name()] = b.name();
    matches[v.name()] = Json{{"model", m.model_index}, {"embedding", emb}};
  }
  Json out{{"matches", matches}};
  if (cert.labeling) out["labeling"] = io::to_json(*cert.labeling);
  return out;
}

Json equivalence_json(const EquivalenceReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(Json{{"name", e.name}, {"modeled", e.modeled}, {"immersed", e.immersed}});
  }
  return Json{{"max_vertices", r.max_vertices},
              {"modeled", names(r.modeled_names())},
              {"immersed", names(r.immersed_names())},
              {"disagreements", names(r.disagreements())},
              {"entries", entries},
              {"note", "agreement is checked up to the vertex bound only"}};
}

Json witness_names(const std::vector<std::string>& specs) { return Json(specs); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locally combinatorially defined manifolds and branched manifolds"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("-o,--output", out.path, "Write the output document here instead of stdout");
  std::size_t budget = 100000;
  app.add_option("--collapse-budget", budget, "Collapse budget for 3-ball recognition");

  std::function<int()> action;

  // validate
  auto* validate = app.add_subcommand("validate", "Validate a complex, model, model set or branched manifold");
  std::string validate_in;
  validate->add_option("input", validate_in, "Document or catalog:<name>")->required();
  validate->callback([&] {
    action = [&] {
      const auto doc = load(validate_in);
      Json params{{"input", validate_in}, {"collapse_budget", budget}};
      if (doc.kind == "complex") {
        const auto k = io::as_complex(doc, validate_in);
        const auto status = is_combinatorial_manifold(k, k.dim());
        Json d{{"dim", k.dim()},
               {"f_vector", k.f_vector()},
               {"euler_characteristic", k.euler_characteristic()},
               {"connected", is_connected(k)},
               {"manifold_status", std::string(to_string(status))}};
        out.write(report("validate", params, "valid", d));
        return affirmative;
      }
      if (doc.kind == "model" || doc.kind == "model-set") {
        const auto ms = io::as_model_set(doc, validate_in);
        Json per = Json::array();
        bool all = true;
        for (const auto& m : ms.models) {
          const auto v = validate_local_model(m, budget);
          all = all && v == Validity::valid;
          per.push_back(std::string(to_string(v)));
        }
        out.write(report("validate", params, all ? "valid" : "invalid", Json{{"models", per}}));
        return all ? affirmative : negative;
      }
      if (doc.kind == "branched" || doc.kind == "build") {
        const auto w = io::as_branched(doc, validate_in);
        const auto r = validate_branched(w, budget);
        Json vs = Json::array();
        for (const auto& v : r.violations) {
          Json e{{"kind", v.kind}, {"detail", v.detail}};
          if (v.projection) e["projection"] = *v.projection;
          vs.push_back(e);
        }
        Json d{{"violations", vs}, {"warnings", r.warnings}};
        if (r.ok() && w.dim <= 3) {
          d["branch_set"] = io::to_json(branch_set(w));
          d["boundary"] = io::to_json(branched_boundary(w));
          d["nice"] = is_nice(w);
        }
        out.write(report("validate", params, r.ok() ? "valid" : "invalid", d));
        return r.ok() ? affirmative : negative;
      }
      throw io::ParseError(validate_in + ": /kind: cannot validate a document of kind \"" + doc.kind + "\"");
    };
  });

  // subdivide
  auto* subdivide = app.add_subcommand("subdivide", "Stellar, chain or standard subdivision of a top simplex");
  std::string sub_in, stellar, chain, tau, standard;
  std::size_t count = 1, big_n = 1;
  std::string prefix;
  subdivide->add_option("input", sub_in, "Complex document or catalog:<name>")->required();
  auto* o_st = subdivide->add_option("--stellar", stellar, "Simplex v0,v1,... to cone off");
  auto* o_ch = subdivide->add_option("--chain", chain, "Simplex to start a chain subdivision at");
  auto* o_sd = subdivide->add_option("--standard", standard, "Ordered vertices v0,...,vn of the simplex");
  subdivide->add_option("--tau", tau, "Face of the chain subdivision");
  subdivide->add_option("--count", count, "Length of the chain");
  subdivide->add_option("--N", big_n, "N of the standard subdivision");
  subdivide->add_option("--prefix", prefix, "Name prefix for the new vertices");
  o_st->excludes(o_ch, o_sd);
  o_ch->excludes(o_sd);
  subdivide->callback([&] {
    action = [&] {
      const auto k = load_complex(sub_in);
      Json params{{"input", sub_in}};
      SubdivisionRecord rec;
      if (!stellar.empty()) {
        params["stellar"] = stellar;
        rec = stellar_subdivide(k, parse_simplex_arg(stellar),
                                prefix.empty() ? std::nullopt : std::optional<VertexId>(VertexId(prefix)));
      } else if (!chain.empty()) {
        if (tau.empty()) throw Error("--chain needs --tau");
        params.update(Json{{"chain", chain}, {"tau", tau}, {"count", count}});
        rec = chain_subdivide(k, parse_simplex_arg(chain), parse_simplex_arg(tau), count);
      } else if (!standard.empty()) {
        params.update(Json{{"standard", standard}, {"N", big_n}});
        rec = standard_subdivide(k, parse_vertex_list(standard), big_n,
                                 prefix.empty() ? std::nullopt : std::optional<std::string>(prefix));
      } else {
        throw Error("one of --stellar, --chain or --standard is required");
      }
      Json nv = Json::array();
      for (const auto& v : rec.new_vertices) nv.push_back(v.name());
      out.write(report("subdivide", params, "done", Json{{"new_vertices", nv}}, "complex", io::to_json(rec.result)));
      return affirmative;
    };
  });

  // encode / decode
  auto* encode_cmd = app.add_subcommand("encode", "Encode a labeled complex by standard subdivisions");
  std::string enc_in, enc_labels, enc_models;
  encode_cmd->add_option("input", enc_in, "Complex or labeled-complex document")->required();
  encode_cmd->add_option("--labels", enc_labels, "Labeling document");
  encode_cmd->add_option("--models", enc_models, "Take the simplex classes from this model set");
  encode_cmd->callback([&] {
    action = [&] {
      const auto in = load_labeled(enc_in, enc_labels);
      Json params{{"input", enc_in}, {"labels", enc_labels}, {"models", enc_models}};
      const auto fam = enc_models.empty() ? build_family(in.complex.dim(), simplex_classes(in.complex, in.labeling))
                                          : build_family(load_models(enc_models));
      const auto rec = encode(in.complex, in.labeling, fam);
      params["N_schedule"] = family_json(fam)["entries"];
      out.write(report("encode", params, "done", Json::object(), "encoded",
                       Json{{"complex", io::to_json(rec.result)}, {"family", family_json(fam)}}));
      return affirmative;
    };
  });

  auto* decode_cmd = app.add_subcommand("decode", "Recover a labeled complex from its encoding");
  std::string dec_in;
  decode_cmd->add_option("input", dec_in, "Encoded document (output of encode)")->required();
  decode_cmd->callback([&] {
    action = [&] {
      const auto doc = load(dec_in);
      io::expect_kind(doc, {"encoded"}, dec_in);
      const auto k = io::complex_from_json(doc.payload.at("complex"), "/payload/complex");
      const auto fam = family_from_json(doc.payload.at("family"));
      const auto d = decode(k, fam);
      out.write(report("decode", Json{{"input", dec_in}}, "done", Json::object(), "labeled-complex",
                       Json{{"complex", io::to_json(d.complex)}, {"labeling", io::to_json(d.labeling)}}));
      return affirmative;
    };
  });

  // color / geographies
  auto* color = app.add_subcommand("color", "Greedy d-coloring");
  std::string color_in;
  std::size_t color_d = 1;
  color->add_option("input", color_in, "Complex document or catalog:<name>")->required();
  color->add_option("--d", color_d, "Radius d")->required();
  color->callback([&] {
    action = [&] {
      const auto k = load_complex(color_in);
      const auto c = compute_d_coloring(k, color_d);
      out.write(report("color", Json{{"input", color_in}, {"d", color_d}}, "done",
                       Json{{"num_colors", c.num_colors()}}, "coloring", io::to_json(c)));
      return affirmative;
    };
  });

  auto* geos = app.add_subcommand("geographies", "Geographies of a d-colored complex");
  std::string geo_in, geo_coloring;
  std::size_t geo_d = 1;
  geos->add_option("input", geo_in, "Complex document or catalog:<name>")->required();
  geos->add_option("--d", geo_d, "Radius d")->required();
  geos->add_option("--coloring", geo_coloring, "Coloring document; greedy when omitted");
  geos->callback([&] {
    action = [&] {
      const auto k = load_complex(geo_in);
      Coloring c;
      if (geo_coloring.empty()) {
        c = compute_d_coloring(k, geo_d);
      } else {
        const auto doc = load(geo_coloring);
        io::expect_kind(doc, {"coloring"}, geo_coloring);
        c = io::coloring_from_json(doc.payload, "/payload");
      }
      const auto g = geographize(k, c, geo_d);
      Json list = Json::array();
      for (const auto& x : g.geographies) list.push_back(Json{{"center_color", x.center_color}, {"chart", io::to_json(x.chart)}});
      Json of = Json::object();
      for (const auto& v : k.vertices()) of[v.name()] = g.geography_index(v);
      out.write(report("geographies", Json{{"input", geo_in}, {"d", geo_d}, {"coloring", geo_coloring}}, "done",
                       Json{{"count", g.geographies.size()}}, "geographies",
                       Json{{"radius", geo_d}, {"coloring", io::to_json(c)}, {"geographies", list}, {"vertex_geography", of}}));
      return affirmative;
    };
  });

  // check-modeled
  auto* check = app.add_subcommand("check-modeled", "Is a complex modeled on a model set?");
  std::string chk_in, chk_models, chk_labels;
  check->add_option("input", chk_in, "Complex or labeled-complex document")->required();
  check->add_option("--models", chk_models, "Model or model-set document")->required();
  check->add_option("--labels", chk_labels, "Labeling fixed in advance");
  check->callback([&] {
    action = [&] {
      const auto in = load_labeled(chk_in, chk_labels);
      const auto ms = load_models(chk_models);
      const bool fixed = !in.labeling.empty();
      const auto cert = is_modeled_on(in.complex, ms, fixed ? &in.labeling : nullptr);
      Json params{{"input", chk_in}, {"models", chk_models}, {"labels", chk_labels}};
      if (!cert) {
        out.write(report("check-modeled", params, "not modeled"));
        return negative;
      }
      out.write(report("check-modeled", params, "modeled", Json::object(), "certificate", certificate_json(*cert)));
      return affirmative;
    };
  });

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Closed 1- and 2-manifolds up to a vertex bound");
  int en_dim = 2;
  std::size_t en_max = 6;
  std::string en_models;
  enumerate->add_option("--dim", en_dim, "Dimension (1 or 2)");
  enumerate->add_option("--max-vertices", en_max, "Vertex bound")->required();
  enumerate->add_option("--models", en_models, "Keep only complexes modeled on this set");
  enumerate->callback([&] {
    action = [&] {
      std::vector<SimplicialComplex> ks;
      if (en_models.empty()) {
        EnumerationOptions opts;
        opts.max_vertices = en_max;
        ks = enumerate_closed_manifolds(en_dim, opts);
      } else {
        ks = enumerate_modeled(load_models(en_models), en_max);
      }
      Json list = Json::array();
      for (const auto& k : ks) list.push_back(Json{{"name", manifold_name(k)}, {"complex", io::to_json(k)}});
      out.write(report("enumerate", Json{{"dim", en_dim}, {"max_vertices", en_max}, {"models", en_models}}, "done",
                       Json{{"count", ks.size()}}, "complex-list", Json{{"complexes", list}}));
      return affirmative;
    };
  });

  // build-universal
  auto* build = app.add_subcommand("build-universal", "Universal branched manifold of a model set");
  std::string b_models;
  std::vector<std::string> b_witnesses;
  std::optional<std::size_t> b_d;
  build->add_option("--models", b_models, "Model or model-set document")->required();
  build->add_option("--witnesses", b_witnesses, "Witness complexes")->required();
  build->add_option("--d", b_d, "Coloring radius d");
  build->callback([&] {
    action = [&] {
      const auto ms = load_models(b_models);
      std::vector<SimplicialComplex> ws;
      for (const auto& w : b_witnesses) ws.push_back(load_complex(w));
      const auto b = build_universal(ms, ws, b_d);
      Json params{{"models", b_models}, {"witnesses", witness_names(b_witnesses)}, {"d", b.radius}};
      out.write(report("build-universal", params, "done",
                       Json{{"geographies", b.geographies.geographies.size()}, {"warnings", b.report.warnings}},
                       "build", io::to_json(b)));
      return affirmative;
    };
  });

  // immerse
  auto* immerse = app.add_subcommand("immerse", "Search for a proper immersion into a branched manifold");
  std::string im_in, im_target;
  immerse->add_option("input", im_in, "Complex document or catalog:<name>")->required();
  immerse->add_option("--target", im_target, "Branched or build document")->required();
  immerse->callback([&] {
    action = [&] {
      const auto m = load_complex(im_in);
      const auto w = io::as_branched(load(im_target), im_target);
      const auto f = find_immersion(m, w);
      Json params{{"input", im_in}, {"target", im_target}};
      if (!f) {
        out.write(report("immerse", params, "no immersion"));
        return negative;
      }
      out.write(report("immerse", params, "immersion", Json::object(), "immersion", io::to_json(*f)));
      return affirmative;
    };
  });

  // verify-equivalence
  auto* verify = app.add_subcommand("verify-equivalence", "Compare modeled-on with immersing on enumerated manifolds");
  std::string v_models, v_target;
  std::vector<std::string> v_witnesses;
  std::optional<std::size_t> v_d;
  std::size_t v_max = 6;
  verify->add_option("--models", v_models, "Model or model-set document")->required();
  auto* o_vw = verify->add_option("--witnesses", v_witnesses, "Witnesses for a fresh universal build");
  auto* o_vt = verify->add_option("--target", v_target, "Branched or build document");
  verify->add_option("--d", v_d, "Coloring radius for the build");
  verify->add_option("--max-vertices", v_max, "Vertex bound")->required();
  o_vw->excludes(o_vt);
  verify->callback([&] {
    action = [&] {
      const auto ms = load_models(v_models);
      Json params{{"models", v_models}, {"max_vertices", v_max}};
      EquivalenceReport r;
      if (!v_target.empty()) {
        params["target"] = v_target;
        r = verify_equivalence(ms, io::as_branched(load(v_target), v_target), v_max);
      } else {
        std::vector<SimplicialComplex> ws;
        for (const auto& w : v_witnesses) ws.push_back(load_complex(w));
        const auto b = build_universal(ms, ws, v_d);
        params["witnesses"] = witness_names(v_witnesses);
        params["d"] = b.radius;
        r = verify_equivalence(ms, b, v_max);
      }
      out.write(report("verify-equivalence", params, r.agree() ? "agree" : "disagree", equivalence_json(r)));
      return r.agree() ? affirmative : negative;
    };
  });

  // bundle
  auto* bundle = app.add_subcommand("bundle", "GL(2,Z) words and torus bundle certificates");
  bundle->require_subcommand(1);
  bundle->fallthrough();
  std::string word_arg, matrix_arg;
  auto* b_eval = bundle->add_subcommand("eval", "Evaluate a word");
  b_eval->add_option("word", word_arg, "Letters like \"a1 a2\" or a word document")->required();
  b_eval->callback([&] {
    action = [&] {
      const auto w = load_word(word_arg);
      out.write(report("bundle eval", Json{{"word", w.to_string()}}, "done", Json::object(), "matrix",
                       io::to_json(eval_word(w))));
      return affirmative;
    };
  });
  auto* b_factor = bundle->add_subcommand("factor", "Factor a matrix into a1, a2, a3");
  b_factor->add_option("matrix", matrix_arg, "Entries \"a,b,c,d\" or a matrix document")->required();
  b_factor->callback([&] {
    action = [&] {
      const auto m = load_matrix(matrix_arg);
      const auto w = factor_matrix(m);
      out.write(report("bundle factor", Json{{"matrix", io::to_json(m)}}, "done",
                       Json{{"text", w.to_string()}, {"length", w.size()}}, "word", io::to_json(w)));
      return affirmative;
    };
  });
  auto* b_cert = bundle->add_subcommand("certify", "Torus bundle immersion certificate for a word");
  b_cert->add_option("word", word_arg, "Letters like \"a1 a2\" or a word document")->required();
  b_cert->callback([&] {
    action = [&] {
      const auto w = load_word(word_arg);
      const auto d = bundle_certificate(w);
      Json payload{{"word", io::to_json(w)},
                   {"monodromy", io::to_json(d.monodromy)},
                   {"fiber", d.fiber},
                   {"covering_relation", d.covering_relation},
                   {"base_cycle", io::to_json(d.base.cycle)},
                   {"train_track", io::to_json(d.base.track)},
                   {"immersion", io::to_json(d.base.immersion)}};
      out.write(report("bundle certify", Json{{"word", w.to_string()}}, "certified", Json::object(), "bundle", payload));
      return affirmative;
    };
  });

  // format
  auto* format = app.add_subcommand("format", "Rewrite a document in canonical form");
  std::string fmt_in;
  format->add_option("input", fmt_in, "Any document")->required();
  format->callback([&] {
    action = [&] {
      auto doc = load(fmt_in);
      const std::string p = "/payload";
      if (doc.kind == "complex") {
        doc.payload = io::to_json(io::as_complex(doc, fmt_in));
      } else if (doc.kind == "labeling") {
        doc.payload = io::to_json(io::labeling_from_json(doc.payload, p));
      } else if (doc.kind == "model") {
        doc.payload = io::to_json(io::model_from_json(doc.payload, p));
      } else if (doc.kind == "model-set") {
        doc.payload = io::to_json(io::model_set_from_json(doc.payload, p));
      } else if (doc.kind == "branched") {
        doc.payload = io::to_json(io::branched_from_json(doc.payload, p));
      } else if (doc.kind == "word") {
        doc.payload = io::to_json(io::word_from_json(doc.payload, p));
      } else if (doc.kind == "matrix") {
        doc.payload = io::to_json(io::matrix_from_json(doc.payload, p));
      } else if (doc.kind == "coloring") {
        doc.payload = io::to_json(io::coloring_from_json(doc.payload, p));
      }
      out.write(doc);
      return affirmative;
    };
  });

  // catalog
  auto* cat = app.add_subcommand("catalog", "List or print built-in complexes");
  std::string cat_name;
  cat->add_option("name", cat_name, "Complex name, e.g. octahedron or cycle:6");
  cat->callback([&] {
    action = [&] {
      if (cat_name.empty()) {
        for (const auto& n : catalog::names()) std::cout << n << "\n";
        return affirmative;
      }
      out.write(io::Document{"complex", io::to_json(catalog::by_name(cat_name))});
      return affirmative;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? affirmative : input_error;
  }
  try {
    return action();
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal_error;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  }
}
