#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcdkit/branched.hpp"
#include "lcdkit/labeling.hpp"
#include "lcdkit/model.hpp"

namespace lcdkit {

/// A witness complex with an immersion into a branched manifold.
struct ImmersedWitness {
  SimplicialComplex complex;
  Immersion immersion;
};

/// Labeled models (closed_star(u), u) with labels zeta(v) = name of the
/// image of v, one per label-preserving isomorphism class. The alphabet is
/// the vertex set of w.
ModelSet models_from_branched(const BranchedManifold& w, const std::vector<ImmersedWitness>& witnesses);

struct UniversalBuild {
  ModelSet models;
  std::size_t radius = 2;
  std::vector<SimplicialComplex> witnesses;
  /// Disjoint union of the witnesses; witness i is prefixed "q<i>.".
  SimplicialComplex q;
  Coloring coloring;
  Geographized geographies;
  /// Vertex "g<k>" of w.complex is geographies.geographies[k].
  BranchedManifold w;
  /// Theta_G restricted to each witness.
  std::vector<Immersion> theta;
  /// Psi: center color of each geography.
  std::vector<Color> psi;
  BranchedReport report;
};

VertexId geography_vertex(std::size_t k);
std::string witness_prefix(std::size_t i);

/// Default radius: max(2, largest model diameter + 1).
std::size_t default_radius(const ModelSet& ms);

/// W = Theta_G(Q) with projections pi_x = Psi on the closed star of x.
/// Throws Error when a witness is not modeled on ms or d is too small.
UniversalBuild build_universal(const ModelSet& ms, const std::vector<SimplicialComplex>& witnesses,
                               std::optional<std::size_t> radius = std::nullopt);

/// Theta_G on m: for a witness (equal complex) the recorded immersion;
/// otherwise m is colored (by `coloring` or greedily) and each vertex is
/// sent to its geography. Throws Error "witness set not saturated" when a
/// geography is missing from the build.
Immersion canonical_immersion(const UniversalBuild& build, const SimplicialComplex& m,
                              const Coloring* coloring = nullptr);

struct EquivalenceEntry {
  SimplicialComplex complex;
  std::string name;
  bool modeled = false;
  bool immersed = false;
};

struct EquivalenceReport {
  std::size_t max_vertices = 0;
  std::vector<EquivalenceEntry> entries;

  std::vector<std::string> modeled_names() const;
  std::vector<std::string> immersed_names() const;
  std::vector<std::string> disagreements() const;
  bool agree() const { return disagreements().empty(); }
};

/// Compares is_modeled_on(., ms) with find_immersion(., build.w) on every
/// connected closed n-manifold with at most max_vertices vertices.
EquivalenceReport verify_equivalence(const ModelSet& ms, const UniversalBuild& build,
                                     std::size_t max_vertices);
/// Same comparison for an arbitrary branched manifold.
EquivalenceReport verify_equivalence(const ModelSet& ms, const BranchedManifold& w,
                                     std::size_t max_vertices);

/// For adjacent vertices u, v of Q: the (d-1)-neighborhood of v's color
/// inside u's geography chart lies in v's geography chart.
bool geography_overlap_holds(const UniversalBuild& build);

}  // namespace lcdkit
