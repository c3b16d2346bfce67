#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lcdkit/complex.hpp"

namespace lcdkit {

using Label = std::string;

/// Partial map from vertices and top simplices of a host complex to labels.
struct Labeling {
  std::map<VertexId, Label> vertex_labels;
  std::map<Simplex, Label> simplex_labels;

  const Label* vertex_label(const VertexId& v) const;
  const Label* simplex_label(const Simplex& s) const;
  bool empty() const { return vertex_labels.empty() && simplex_labels.empty(); }
  /// Every label in use.
  std::set<Label> alphabet() const;
  /// Throws Error unless every labeled vertex/simplex is a vertex/top simplex of k.
  void check_domain(const SimplicialComplex& k) const;
  /// Restriction to the vertices and top simplices of a subcomplex.
  Labeling restricted_to(const SimplicialComplex& sub) const;

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

using Color = int;

/// Vertex coloring together with the radius it is meant to be valid for.
struct Coloring {
  std::map<VertexId, Color> colors;
  std::size_t radius = 1;

  Color color_of(const VertexId& v) const;
  std::size_t num_colors() const;
  Labeling to_labeling() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Canonical form of a colored d-neighborhood: vertices are renamed to their
/// colors, so two geographies are equal iff the colored neighborhoods are
/// color-isomorphic.
struct Geography {
  Color center_color = 0;
  SimplicialComplex chart;
  std::size_t radius = 1;

  friend bool operator==(const Geography& a, const Geography& b);
  friend bool operator<(const Geography& a, const Geography& b);
};

/// Name of the chart vertex carrying color c.
VertexId color_vertex(Color c);

struct GeographyLabeling {
  Coloring coloring;
  std::map<VertexId, Geography> geography_of;
};

struct Geographized {
  GeographyLabeling labeling;
  /// Distinct geographies, in canonical order.
  std::vector<Geography> geographies;
  /// Position of a vertex's geography in `geographies`.
  std::size_t geography_index(const VertexId& v) const;
};

/// Colors distinct on every N(K, v, d). Uses the distance criterion: two
/// vertices share some d-neighborhood iff their distance is at most 2d.
/// Throws Error when `colors` does not label every vertex.
bool is_d_coloring(const SimplicialComplex& k, const Labeling& colors, std::size_t d);
bool is_d_coloring(const SimplicialComplex& k, const Coloring& colors, std::size_t d);

/// Greedy coloring in vertex order with the least color (starting at 1) not
/// used within distance 2d.
Coloring compute_d_coloring(const SimplicialComplex& k, std::size_t d);

Geography compute_geography(const SimplicialComplex& k, const Coloring& colors, const VertexId& v,
                            std::size_t d);
Geographized geographize(const SimplicialComplex& k, const Coloring& colors, std::size_t d);

/// The unique color-preserving isomorphism N(K,u,d) -> N(K,v,d). Throws
/// Error when the geographies of u and v differ.
SimplicialMap geography_transport(const SimplicialComplex& k, const GeographyLabeling& gl,
                                  const VertexId& u, const VertexId& v);

}  // namespace lcdkit
