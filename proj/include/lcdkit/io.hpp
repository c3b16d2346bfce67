#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "lcdkit/branched.hpp"
#include "lcdkit/bundles.hpp"
#include "lcdkit/complex.hpp"
#include "lcdkit/error.hpp"
#include "lcdkit/labeling.hpp"
#include "lcdkit/model.hpp"
#include "lcdkit/subdivision.hpp"
#include "lcdkit/universal.hpp"

/// JSON documents: {"format_version": 1, "kind": ..., "payload": ...}.
/// Objects are written with sorted keys, vertices in VertexId order and
/// simplices lexicographically, so serialize(parse(serialize(x))) is
/// byte-identical to serialize(x).
namespace lcdkit::io {

using Json = nlohmann::json;

inline constexpr int format_version = 1;

/// Malformed input. The message starts with a location: "source:line:col"
/// for syntax errors, "source: /json/pointer" for schema errors.
class ParseError : public Error {
 public:
  using Error::Error;
};

struct Document {
  std::string kind;
  Json payload;
};

/// Parses a document. `source` names the input in diagnostics.
Document parse_document(std::string_view text, std::string_view source = "<input>");
Document read_document(const std::string& path);
std::string serialize(const Document& doc);

/// Throws ParseError unless doc.kind is one of `kinds`.
void expect_kind(const Document& doc, std::initializer_list<std::string_view> kinds,
                 std::string_view source = "<input>");

Json to_json(const SimplicialComplex& k);
Json to_json(const Labeling& l);
Json to_json(const LocalModel& m);
Json to_json(const ModelSet& ms);
Json to_json(const BranchedManifold& w);
Json to_json(const Immersion& f);
Json to_json(const MonodromyWord& w);
Json to_json(const Matrix2Z& m);
Json to_json(const Coloring& c);
Json to_json(const SimplexClass& c);
Json to_json(const UniversalBuild& b);
Json to_json(const std::vector<Simplex>& simplices);

/// Readers; `where` is the JSON pointer of j, used in diagnostics.
SimplicialComplex complex_from_json(const Json& j, const std::string& where = "");
Labeling labeling_from_json(const Json& j, const std::string& where = "");
LocalModel model_from_json(const Json& j, const std::string& where = "");
ModelSet model_set_from_json(const Json& j, const std::string& where = "");
BranchedManifold branched_from_json(const Json& j, const std::string& where = "");
/// The map is checked to be simplicial from m into w.complex.
Immersion immersion_from_json(const Json& j, const SimplicialComplex& m, const BranchedManifold& w,
                              const std::string& where = "");
MonodromyWord word_from_json(const Json& j, const std::string& where = "");
Matrix2Z matrix_from_json(const Json& j, const std::string& where = "");
Coloring coloring_from_json(const Json& j, const std::string& where = "");
SimplexClass simplex_class_from_json(const Json& j, const std::string& where = "");
Simplex simplex_from_json(const Json& j, const std::string& where = "");

/// Document payload readers that also accept the related kinds: a model
/// where a model set is expected, a build where a branched manifold is.
SimplicialComplex as_complex(const Document& doc, std::string_view source = "<input>");
ModelSet as_model_set(const Document& doc, std::string_view source = "<input>");
BranchedManifold as_branched(const Document& doc, std::string_view source = "<input>");

}  // namespace lcdkit::io
