#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "lcdkit/complex.hpp"
#include "lcdkit/labeling.hpp"

namespace lcdkit {

struct IsomorphismConstraints {
  /// Require source.first to map to base.second.
  std::optional<std::pair<VertexId, VertexId>> base;
  /// When both are set the map must preserve vertex labels and top-simplex
  /// labels (an unlabeled element may only map to an unlabeled element).
  const Labeling* source_labels = nullptr;
  const Labeling* target_labels = nullptr;
};

/// Backtracking search for simplicial isomorphisms with refinement-based
/// pruning. Source vertices are branched on in a fixed order (base vertex,
/// then breadth-first by least VertexId); target candidates are tried in
/// VertexId order, so results are deterministic.
std::optional<SimplicialMap> find_isomorphism(const SimplicialComplex& source,
                                              const SimplicialComplex& target,
                                              const IsomorphismConstraints& constraints = {});

/// Calls `visit` for each isomorphism until it returns false. Returns the
/// number visited.
std::size_t for_each_isomorphism(const SimplicialComplex& source, const SimplicialComplex& target,
                                 const IsomorphismConstraints& constraints,
                                 const std::function<bool(const SimplicialMap&)>& visit);

std::size_t count_isomorphisms(const SimplicialComplex& source, const SimplicialComplex& target,
                               const IsomorphismConstraints& constraints = {},
                               std::size_t limit = static_cast<std::size_t>(-1));

std::size_t count_automorphisms(const SimplicialComplex& k,
                                std::size_t limit = static_cast<std::size_t>(-1));

/// Injective simplicial maps from `pattern` into `host` sending
/// `pattern_center` to `host_center`, such that the closed star of
/// host_center lies in the image. The image is then a subcomplex U of host
/// and the map an isomorphism (pattern, center) -> (U, host_center).
///
/// `visit` receives the vertex map; return false to stop. Returns the number
/// of embeddings visited.
std::size_t for_each_star_embedding(
    const SimplicialComplex& pattern, const VertexId& pattern_center, const SimplicialComplex& host,
    const VertexId& host_center,
    const std::function<bool(const std::map<VertexId, VertexId>&)>& visit);

}  // namespace lcdkit
