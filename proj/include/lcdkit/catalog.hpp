#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lcdkit/complex.hpp"

/// Small named triangulations. Vertex names are decimal integers unless
/// stated otherwise; `prefix` is prepended to every name.
namespace lcdkit::catalog {

SimplicialComplex point(std::string_view name = "0");
/// Cycle on vertices 0..n-1 (n >= 3).
SimplicialComplex cycle(std::size_t n, std::string_view prefix = "");
/// Path with n vertices 0..n-1 (n >= 1).
SimplicialComplex path(std::size_t n, std::string_view prefix = "");
/// The full n-simplex on vertices 0..n.
SimplicialComplex simplex(int n, std::string_view prefix = "");
/// Boundary of the (n+1)-simplex: a combinatorial n-sphere on n+2 vertices.
SimplicialComplex simplex_boundary(int n, std::string_view prefix = "");
/// Octahedron; antipodal pairs are (0,5), (1,3), (2,4).
SimplicialComplex octahedron(std::string_view prefix = "");
/// Seven-vertex torus (Moebius), complete 1-skeleton.
SimplicialComplex torus7(std::string_view prefix = "");
/// Six-vertex real projective plane.
SimplicialComplex rp2_6(std::string_view prefix = "");
/// Annulus: outer triangle 0,1,2 and inner triangle 3,4,5.
SimplicialComplex annulus6(std::string_view prefix = "");
/// Cone from hub "h" over a k-cycle "r0".."r{k-1}".
SimplicialComplex wheel(std::size_t k, std::string_view prefix = "");
/// Two triangles sharing only vertex 0.
SimplicialComplex triangles_sharing_vertex();
/// Two disjoint edges {0,1} and {2,3}.
SimplicialComplex two_disjoint_edges();
/// Two triangle-boundaries (circles) glued at vertex "w":
/// w-a1-b1-w and w-a2-b2-w.
SimplicialComplex wedge_of_two_circles();

/// Name of a complex in the catalog ("octahedron", "torus7", "cycle:6",
/// "wheel:4", "simplex:2", ...). Throws Error for unknown names.
SimplicialComplex by_name(std::string_view name);
std::vector<std::string> names();

}  // namespace lcdkit::catalog
