#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcdkit/complex.hpp"
#include "lcdkit/labeling.hpp"

namespace lcdkit {

/// A local model (K, v) of dimension n, optionally labeled.
struct LocalModel {
  SimplicialComplex complex;
  VertexId center;
  std::optional<Labeling> labeling;
  int dim = 0;
};

enum class Validity { valid, invalid, unknown };
std::string_view to_string(Validity v);

struct ModelSet {
  std::vector<LocalModel> models;
  int dim = 0;

  /// True when some model carries a labeling.
  bool labeled() const;
  /// Throws Error when a model has the wrong dimension or a missing center.
  void check() const;
};

/// Model neighborhood of one vertex: an isomorphism from a model complex onto
/// a subcomplex U of M containing the closed star of the vertex.
struct ModelMatch {
  std::size_t model_index = 0;
  SimplicialMap embedding;
};

struct ModelingCertificate {
  std::map<VertexId, ModelMatch> matches;
  /// Labeling of M used by the matches (labeled model sets only).
  std::optional<Labeling> labeling;
};

/// Ball recognition of |K|: exact for n <= 2, collapse-budgeted for n = 3,
/// unknown for n >= 4 unless trivially invalid.
Validity validate_local_model(const LocalModel& m, std::size_t collapse_budget = 100000);

/// First model neighborhood of x in deterministic order. With `labels`, the
/// model's labeled elements must carry the same labels in M; unlabeled model
/// elements match anything.
std::optional<SimplicialMap> find_model_neighborhood(const SimplicialComplex& m,
                                                     const Labeling* labels, const VertexId& x,
                                                     const LocalModel& model);

/// Certificate that every vertex of m has a model neighborhood. For labeled
/// model sets a labeling of m is searched for by backtracking; `labels`, if
/// given, fixes part of it in advance.
std::optional<ModelingCertificate> is_modeled_on(const SimplicialComplex& m, const ModelSet& ms,
                                                 const Labeling* labels = nullptr);

/// Re-checks every match of a certificate against m.
bool check_certificate(const SimplicialComplex& m, const ModelSet& ms,
                       const ModelingCertificate& cert);

struct EnumerationOptions {
  std::size_t max_vertices = 6;
  /// Vertex degrees allowed in the output; empty means no restriction.
  std::vector<std::size_t> allowed_degrees;
};

/// Connected closed combinatorial n-manifolds (n in {1, 2}) with at most
/// max_vertices vertices, one per isomorphism class, ordered by vertex count
/// and then generation order.
std::vector<SimplicialComplex> enumerate_closed_manifolds(int n, const EnumerationOptions& opts);

/// Members of enumerate_closed_manifolds that pass is_modeled_on.
std::vector<SimplicialComplex> enumerate_modeled(const ModelSet& ms, std::size_t max_vertices);

/// "S2", "RP2", "T2", "K2", "S_g" (orientable genus g) or "N_k"
/// (non-orientable genus k) for a connected closed surface; "C<n>" for a cycle.
std::string manifold_name(const SimplicialComplex& k);

}  // namespace lcdkit
