#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcdkit/complex.hpp"

namespace lcdkit {

/// Local projection pi: W_i -> chart. The chart is a combinatorial n-ball.
struct LocalProjection {
  SimplicialComplex domain;
  SimplicialComplex chart;
  std::map<VertexId, VertexId> vertex_map;
  /// Subcomplexes of the domain, each mapped isomorphically onto the chart.
  std::vector<SimplicialComplex> sheets;

  const VertexId& operator()(const VertexId& v) const;
};

struct BranchedManifold {
  SimplicialComplex complex;
  std::vector<LocalProjection> projections;
  int dim = 0;
};

/// Names used in validation reports.
namespace violation {
inline constexpr const char* dimension = "dimension";
inline constexpr const char* domain_not_subcomplex = "domain_not_subcomplex";
inline constexpr const char* map_not_simplicial = "map_not_simplicial";
inline constexpr const char* map_degenerate = "map_degenerate";
inline constexpr const char* chart_not_ball = "chart_not_ball";
inline constexpr const char* sheet_not_in_domain = "sheet_not_in_domain";
inline constexpr const char* sheet_not_isomorphic = "sheet_not_isomorphic";
inline constexpr const char* sheet_union_mismatch = "sheet_union_mismatch";
inline constexpr const char* not_covered = "not_covered";
inline constexpr const char* compatibility = "compatibility";
}  // namespace violation

struct Violation {
  std::string kind;
  std::string detail;
  std::optional<std::size_t> projection;
};

struct BranchedReport {
  std::vector<Violation> violations;
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty(); }
  bool has(std::string_view kind) const;
};

/// Checks coverage, the sheet condition, sheet isomorphisms, chart ballness
/// and compatibility on vertices.
BranchedReport validate_branched(const BranchedManifold& w, std::size_t collapse_budget = 100000);

/// Closure of the simplices whose link is neither a sphere nor a ball of the
/// complementary dimension. Throws Error for n >= 4.
SimplicialComplex branch_set(const BranchedManifold& w);

/// Simplices s with a projection whose domain contains closed_star(s) and
/// which maps s into the chart boundary.
SimplicialComplex branched_boundary(const BranchedManifold& w);

/// Every simplex has a projection whose domain contains its closed star.
bool is_nice(const BranchedManifold& w);

/// One projection per vertex: domain = chart = closed star, identity map,
/// one sheet.
BranchedManifold closed_manifold_as_branched(const SimplicialComplex& m);

struct Immersion {
  SimplicialMap map;
  /// Per source vertex, a projection i with map(star(x)) in W_i on which
  /// pi_i o map is injective.
  std::map<VertexId, std::size_t> witnesses;
};

struct ImmersionCheck {
  std::optional<Immersion> immersion;
  /// First violation found, empty on success.
  std::string reason;
};

/// Nondegeneracy, a witness projection at every vertex, injectivity of
/// pi_j o f on star(x) intersected with f^-1(W_j) for every j, and
/// properness f^-1(boundary W) = boundary M.
ImmersionCheck check_immersion(const SimplicialComplex& m, const BranchedManifold& w,
                               const SimplicialMap& f);
std::optional<Immersion> is_immersion(const SimplicialComplex& m, const BranchedManifold& w,
                                      const SimplicialMap& f);

/// Backtracking search; source vertices in breadth-first order, targets in
/// VertexId order. Returns the first immersion found.
std::optional<Immersion> find_immersion(const SimplicialComplex& m, const BranchedManifold& w);

/// Number of immersions (stopping at `limit`).
std::size_t count_immersions(const SimplicialComplex& m, const BranchedManifold& w,
                             std::size_t limit = static_cast<std::size_t>(-1));

}  // namespace lcdkit
