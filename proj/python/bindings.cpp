// Python module _core. Structured values cross the boundary as canonical
// JSON document text; lcdkit/__init__.py converts them to dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcdkit/bundles.hpp"
#include "lcdkit/catalog.hpp"
#include "lcdkit/io.hpp"
#include "lcdkit/model.hpp"
#include "lcdkit/subdivision.hpp"
#include "lcdkit/universal.hpp"

namespace py = pybind11;
using namespace lcdkit;
using io::Json;

namespace {

io::Document doc(const std::string& text) { return io::parse_document(text, "<python>"); }

std::string out(const std::string& kind, Json payload) { return io::serialize({kind, std::move(payload)}); }

std::string status(const std::string& complex) {
  const auto k = io::as_complex(doc(complex));
  return std::string(to_string(is_combinatorial_manifold(k, k.dim())));
}

py::list validate(const std::string& branched) {
  py::list result;
  for (const auto& v : validate_branched(io::as_branched(doc(branched))).violations) {
    py::dict d;
    d["kind"] = v.kind;
    d["detail"] = v.detail;
    d["projection"] = v.projection ? py::cast(*v.projection) : py::none();
    result.append(d);
  }
  return result;
}

bool modeled(const std::string& complex, const std::string& models) {
  return is_modeled_on(io::as_complex(doc(complex)), io::as_model_set(doc(models))).has_value();
}

std::optional<std::string> immerse(const std::string& complex, const std::string& target) {
  const auto f = find_immersion(io::as_complex(doc(complex)), io::as_branched(doc(target)));
  if (!f) return std::nullopt;
  return out("immersion", io::to_json(*f));
}

std::string build(const std::string& models, const std::vector<std::string>& witnesses,
                  std::optional<std::size_t> radius) {
  std::vector<SimplicialComplex> ws;
  for (const auto& w : witnesses) ws.push_back(io::as_complex(doc(w)));
  return out("build", io::to_json(build_universal(io::as_model_set(doc(models)), ws, radius)));
}

py::dict equivalence(const std::string& models, const std::string& target, std::size_t max_vertices) {
  const auto r = verify_equivalence(io::as_model_set(doc(models)), io::as_branched(doc(target)), max_vertices);
  py::dict d;
  d["modeled"] = r.modeled_names();
  d["immersed"] = r.immersed_names();
  d["disagreements"] = r.disagreements();
  d["agree"] = r.agree();
  return d;
}

std::string subdivide(const std::string& complex, const std::vector<std::string>& ordered, std::size_t big_n) {
  std::vector<VertexId> vs(ordered.begin(), ordered.end());
  return out("complex", io::to_json(standard_subdivide(io::as_complex(doc(complex)), vs, big_n).result));
}

std::vector<std::vector<long long>> rows(const Matrix2Z& m) { return {{m.a, m.b}, {m.c, m.d}}; }

std::string factor(const std::vector<std::vector<long long>>& r) {
  if (r.size() != 2 || r[0].size() != 2 || r[1].size() != 2) throw Error("expected a 2x2 matrix");
  return factor_matrix(Matrix2Z{r[0][0], r[0][1], r[1][0], r[1][1]}).to_string();
}

py::dict certify(const std::string& word) {
  const auto b = bundle_certificate(MonodromyWord::parse(word));
  py::dict d;
  d["word"] = b.base.word.to_string();
  d["monodromy"] = rows(b.monodromy);
  d["fiber"] = b.fiber;
  d["covering_relation"] = b.covering_relation;
  d["cycle"] = out("complex", io::to_json(b.base.cycle));
  d["immersion"] = out("immersion", io::to_json(b.base.immersion));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Locally constrained manifolds: complexes, models, branched manifolds and bundles";
  static py::exception<Error> error(m, "LcdkitError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  m.attr("format_version") = io::format_version;
  m.def("catalog_names", &catalog::names);
  m.def("catalog", [](const std::string& name) { return out("complex", io::to_json(catalog::by_name(name))); });
  m.def("canonical", [](const std::string& text) { return io::serialize(doc(text)); });
  m.def("manifold_status", &status);
  m.def("validate_branched", &validate);
  m.def("is_modeled_on", &modeled);
  m.def("find_immersion", &immerse);
  m.def("build_universal", &build, py::arg("models"), py::arg("witnesses"), py::arg("radius") = py::none());
  m.def("verify_equivalence", &equivalence);
  m.def("standard_subdivide", &subdivide);
  m.def("eval_word", [](const std::string& w) { return rows(eval_word(MonodromyWord::parse(w))); });
  m.def("factor_matrix", &factor);
  m.def("bundle_certificate", &certify);
}
