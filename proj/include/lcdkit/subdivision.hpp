#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lcdkit/complex.hpp"
#include "lcdkit/labeling.hpp"
#include "lcdkit/model.hpp"

namespace lcdkit {

struct SubdivisionRecord {
  SimplicialComplex original;
  SimplicialComplex result;
  /// Each maximal simplex of `result` to the maximal simplex of `original`
  /// containing it.
  std::map<Simplex, Simplex> simplex_origin;
  std::set<VertexId> new_vertices;
};

/// Cone from a new vertex over the boundary of the top simplex sigma
/// (n >= 2). The new vertex is `name`, or a fresh "x<k>".
SubdivisionRecord stellar_subdivide(const SimplicialComplex& k, const Simplex& sigma,
                                    std::optional<VertexId> name = std::nullopt);

/// k successive stellar subdivisions, the first of sigma and each later one
/// of x_i * tau for the previous new vertex x_i.
SubdivisionRecord chain_subdivide(const SimplicialComplex& k, const Simplex& sigma,
                                  const Simplex& tau, std::size_t count);

/// n+1 + sum over i != j of (N+i).
std::size_t expected_boundary_degree(int n, std::size_t big_n, int j);

/// Standard subdivision K(sigma): a stellar subdivision at x0, then for each
/// i an (N+i)-chain based on the facet opposite ordered[i]. `ordered` lists
/// the vertices of sigma as v_0..v_n. New vertices are named
/// prefix + "x0" and prefix + "c<i>_<m>"; the default prefix is fresh.
SubdivisionRecord standard_subdivide(const SimplicialComplex& k,
                                     const std::vector<VertexId>& ordered, std::size_t big_n,
                                     std::optional<std::string> prefix = std::nullopt);

/// Isomorphism class key of a labeled n-simplex: its sorted vertex labels
/// (nullopt = unlabeled) and its own label.
struct SimplexClass {
  std::vector<std::optional<Label>> vertex_labels;
  std::optional<Label> simplex_label;

  std::string to_string() const;
  friend auto operator<=>(const SimplexClass&, const SimplexClass&) = default;
  friend bool operator==(const SimplexClass&, const SimplexClass&) = default;
};

struct FamilyEntry {
  SimplexClass key;
  std::size_t big_n = 0;
  /// K(sigma) on boundary vertices "v0".."vn" plus interior vertices.
  SimplicialComplex block;
  /// Degree of v_j inside the block.
  std::vector<std::size_t> boundary_degrees;
};

struct StandardSubdivisionFamily {
  int dim = 0;
  std::vector<FamilyEntry> entries;
  /// 2(n+1): every interior degree is at most this, every boundary degree above.
  std::size_t lambda = 0;
  /// Block boundary degree -> (entry index, position j).
  std::map<std::size_t, std::pair<std::size_t, int>> degree_decoder;

  const FamilyEntry* find(const SimplexClass& key) const;
  /// Label that a boundary vertex of the given block degree decodes to.
  std::optional<Label> label_for_degree(std::size_t degree) const;
};

/// Vertices of a top simplex in codec order: by (label, VertexId) with
/// unlabeled vertices first.
std::vector<VertexId> codec_order(const Simplex& s, const Labeling& labels);
SimplexClass simplex_class(const Simplex& s, const Labeling& labels);
/// Classes of all top simplices of k, sorted and without repeats.
std::vector<SimplexClass> simplex_classes(const SimplicialComplex& k, const Labeling& labels);

/// Assigns N_t = N_min + t(n+1) to the sorted classes and builds each K(sigma).
/// Throws Error for n <= 1.
StandardSubdivisionFamily build_family(int n, const std::vector<SimplexClass>& classes);
/// Classes of the top simplices of every model.
StandardSubdivisionFamily build_family(const ModelSet& ms);

/// Replaces each top simplex by its class's K(sigma). The result is unlabeled.
SubdivisionRecord encode(const SimplicialComplex& m, const Labeling& labels,
                         const StandardSubdivisionFamily& fam);

struct Decoded {
  SimplicialComplex complex;
  Labeling labeling;
};

/// Recovers (M, phi) from an encoded complex. Throws Error with a diagnostic
/// when no decomposition into family blocks exists.
Decoded decode(const SimplicialComplex& encoded, const StandardSubdivisionFamily& fam);

/// The subdivided block of each original top simplex, as a subcomplex of the
/// result.
std::map<Simplex, SimplicialComplex> blocks(const SubdivisionRecord& rec);

}  // namespace lcdkit
