#pragma once

// Shared test fixtures.

#include <string>
#include <utility>
#include <vector>

#include "lcdkit/catalog.hpp"
#include "lcdkit/model.hpp"

namespace lcdkit::fixture {

inline LocalModel path3_model() {
  return LocalModel{catalog::path(3), VertexId("1"), std::nullopt, 1};
}

inline LocalModel wheel_model(std::size_t k) {
  return LocalModel{catalog::wheel(k), VertexId("h"), std::nullopt, 2};
}

inline ModelSet single(LocalModel m) {
  const int dim = m.dim;
  return ModelSet{{std::move(m)}, dim};
}

/// Paths of three vertices labeled (c-1, c, c+1) mod 3 with labels 1,2,3,
/// centered at the middle vertex.
inline ModelSet cyclic_path_models() {
  ModelSet ms;
  ms.dim = 1;
  for (int c = 1; c <= 3; ++c) {
    Labeling lab;
    lab.vertex_labels.emplace(VertexId("0"), std::to_string((c + 1) % 3 + 1));
    lab.vertex_labels.emplace(VertexId("1"), std::to_string(c));
    lab.vertex_labels.emplace(VertexId("2"), std::to_string(c % 3 + 1));
    ms.models.push_back(LocalModel{catalog::path(3), VertexId("1"), lab, 1});
  }
  return ms;
}

/// Cycle with vertex i labeled (i mod 3) + 1.
inline Labeling cyclic_labels(std::size_t n) {
  Labeling lab;
  for (std::size_t i = 0; i < n; ++i) {
    lab.vertex_labels.emplace(VertexId::from_int(static_cast<long long>(i)), std::to_string(i % 3 + 1));
  }
  return lab;
}

/// Named complexes with at most 8 vertices.
inline std::vector<std::pair<std::string, SimplicialComplex>> small_corpus() {
  std::vector<std::pair<std::string, SimplicialComplex>> out;
  for (std::size_t n = 3; n <= 8; ++n) out.emplace_back("C" + std::to_string(n), catalog::cycle(n));
  out.emplace_back("path4", catalog::path(4));
  out.emplace_back("wedge", catalog::wedge_of_two_circles());
  out.emplace_back("two_edges", catalog::two_disjoint_edges());
  out.emplace_back("tetra_boundary", catalog::simplex_boundary(2));
  out.emplace_back("octahedron", catalog::octahedron());
  out.emplace_back("torus7", catalog::torus7());
  out.emplace_back("rp2", catalog::rp2_6());
  out.emplace_back("annulus", catalog::annulus6());
  out.emplace_back("wheel4", catalog::wheel(4));
  out.emplace_back("wheel6", catalog::wheel(6));
  out.emplace_back("triangle", catalog::simplex(2));
  out.emplace_back("bowtie", catalog::triangles_sharing_vertex());
  return out;
}

}  // namespace lcdkit::fixture
