#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcdkit/simplex.hpp"

namespace lcdkit {

/// Immutable abstract simplicial complex, stored by its full (face-closed)
/// simplex set. Copies share storage.
///
/// Besides the VertexId-level API every complex carries a dense index
/// (vertex i is vertices()[i], sorted) with adjacency and incidence tables;
/// the search routines work on those indices.
class SimplicialComplex {
 public:
  using Index = std::uint32_t;

  /// The empty complex.
  SimplicialComplex();

  /// Face closure of `simplices`, plus any extra isolated vertices.
  static SimplicialComplex from_simplices(std::span<const Simplex> simplices,
                                          std::span<const VertexId> extra_vertices = {});
  static SimplicialComplex from_simplices(std::initializer_list<Simplex> simplices);

  bool empty() const noexcept;
  /// Largest simplex dimension; -1 for the empty complex.
  int dim() const noexcept;
  std::size_t num_vertices() const noexcept;
  std::size_t num_simplices() const noexcept;

  const std::vector<VertexId>& vertices() const noexcept;
  const std::set<Simplex>& simplices() const noexcept;
  /// f-vector: entry k counts k-simplices.
  const std::vector<std::size_t>& f_vector() const noexcept;
  std::vector<Simplex> simplices_of_dim(int k) const;
  std::vector<Simplex> maximal_simplices() const;
  /// Simplices of dimension dim().
  std::vector<Simplex> top_simplices() const { return simplices_of_dim(dim()); }

  bool contains(const VertexId& v) const;
  bool contains(const Simplex& s) const;
  bool is_pure() const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;
  long euler_characteristic() const;

  /// Dense index of a vertex; throws Error for unknown vertices.
  Index index_of(const VertexId& v) const;
  std::optional<Index> find_index(const VertexId& v) const;
  const VertexId& vertex(Index i) const { return vertices()[i]; }
  /// Sorted neighbor indices of vertex i in the 1-skeleton.
  std::span<const Index> neighbors(Index i) const;
  std::vector<VertexId> neighbors(const VertexId& v) const;
  bool adjacent(Index a, Index b) const;
  /// All simplices (of every dimension) containing vertex i, as sorted index
  /// tuples.
  std::span<const std::vector<Index>> incident(Index i) const;
  bool contains_indices(const std::vector<Index>& sorted) const;
  std::vector<Index> to_indices(const Simplex& s) const;
  Simplex to_simplex(std::span<const Index> indices) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

 private:
  struct Data;
  explicit SimplicialComplex(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;
};

/// Shortest edge-path length; nullopt encodes "infinite" (no path).
class Distance {
 public:
  static Distance infinite() { return Distance(); }
  static Distance finite(std::size_t value) { return Distance(value); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }
  /// Throws Error when infinite.
  std::size_t value() const;

  friend bool operator==(const Distance&, const Distance&) = default;

 private:
  Distance() = default;
  explicit Distance(std::size_t v) : value_(v) {}
  std::optional<std::size_t> value_;
};

enum class ManifoldStatus { closed_manifold, manifold_with_boundary, not_manifold, unknown };
enum class Recognition { yes, no, unknown };

std::string_view to_string(ManifoldStatus s);
std::string_view to_string(Recognition r);

// --- metric and local structure -------------------------------------------

std::size_t degree(const SimplicialComplex& k, const VertexId& v);
Distance simplicial_distance(const SimplicialComplex& k, const VertexId& u, const VertexId& v);
/// Breadth-first distances from `source`; nullopt for unreachable vertices.
std::vector<std::optional<std::size_t>> distances_from(const SimplicialComplex& k,
                                                       SimplicialComplex::Index source);
/// Largest finite distance from v.
std::size_t eccentricity(const SimplicialComplex& k, const VertexId& v);
/// Largest finite distance between two vertices (0 for the empty complex).
std::size_t diameter(const SimplicialComplex& k);

/// N(K, v, r): every simplex all of whose vertices lie within distance r of v.
SimplicialComplex neighborhood(const SimplicialComplex& k, const VertexId& v, std::size_t r);
/// Simplices containing v, closed under faces. This is the combinatorial
/// neighborhood used by the modeling, branched and immersion code.
SimplicialComplex closed_star(const SimplicialComplex& k, const VertexId& v);
SimplicialComplex closed_star(const SimplicialComplex& k, const Simplex& s);
SimplicialComplex link(const SimplicialComplex& k, const VertexId& v);
SimplicialComplex link(const SimplicialComplex& k, const Simplex& s);
SimplicialComplex induced_subcomplex(const SimplicialComplex& k, std::span<const VertexId> vertices);
/// The complex generated by the given simplices of k (closure).
SimplicialComplex subcomplex_of(std::span<const Simplex> simplices);
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

bool is_connected(const SimplicialComplex& k);
/// Vertex sets of connected components, ordered by least vertex.
std::vector<std::vector<VertexId>> connected_components(const SimplicialComplex& k);

/// Renames vertices through `rename` (which must be injective on k).
SimplicialComplex relabel(const SimplicialComplex& k, const std::map<VertexId, VertexId>& rename);
/// Prefixes every vertex name with `prefix`.
SimplicialComplex prefixed(const SimplicialComplex& k, std::string_view prefix);

// --- manifold recognition --------------------------------------------------

/// Combinatorial k-sphere test. Exact for k <= 2, unknown above.
Recognition is_sphere(const SimplicialComplex& k, int dim);
/// Combinatorial k-ball test. Exact for k <= 2; for k = 3 the necessary
/// conditions are checked and a budgeted collapse decides yes/unknown.
Recognition is_ball(const SimplicialComplex& k, int dim, std::size_t collapse_budget = 100000);
/// Link-based recognition; exact for n <= 3, unknown for n >= 4.
ManifoldStatus is_combinatorial_manifold(const SimplicialComplex& k, int n);
/// (n-1)-simplices lying in exactly one n-simplex, with faces. Throws Error
/// when k is not a combinatorial manifold.
SimplicialComplex boundary_complex(const SimplicialComplex& k);
/// Greedy elementary collapses; true when k collapses to a single vertex
/// within `budget` steps.
bool collapses_to_point(const SimplicialComplex& k, std::size_t budget);
/// Consistent orientation of a pure complex whose codimension-one faces lie
/// in at most two top simplices.
bool is_orientable(const SimplicialComplex& k);

// --- simplicial maps -------------------------------------------------------

/// Total vertex map between two complexes that sends simplices to simplices.
/// The constructor validates; invalid maps throw Error.
class SimplicialMap {
 public:
  SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                std::map<VertexId, VertexId> vertex_map);

  const SimplicialComplex& source() const noexcept { return source_; }
  const SimplicialComplex& target() const noexcept { return target_; }
  const std::map<VertexId, VertexId>& vertex_map() const noexcept { return map_; }

  const VertexId& operator()(const VertexId& v) const;
  /// Image simplex (duplicates removed).
  Simplex image(const Simplex& s) const;
  SimplicialComplex image() const;
  /// Injective on the vertices of every simplex.
  bool nondegenerate() const noexcept { return nondegenerate_; }
  /// Bijective on vertices and simplices.
  bool is_isomorphism() const;
  /// Inverse of an isomorphism; throws Error otherwise.
  SimplicialMap inverse() const;
  /// (*this) after `first`: first.target() must equal source().
  SimplicialMap after(const SimplicialMap& first) const;

  friend bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
    return a.map_ == b.map_;
  }

 private:
  SimplicialComplex source_;
  SimplicialComplex target_;
  std::map<VertexId, VertexId> map_;
  bool nondegenerate_ = true;
};

SimplicialMap identity_map(const SimplicialComplex& k);

/// True if `vertex_map` is total on `source` and sends simplices to simplices
/// of `target`.
bool is_simplicial(const SimplicialComplex& source, const SimplicialComplex& target,
                   const std::map<VertexId, VertexId>& vertex_map);

}  // namespace lcdkit
