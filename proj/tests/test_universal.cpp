#include <doctest.h>

#include <string>

#include "fixtures.hpp"
#include "lcdkit/catalog.hpp"
#include "lcdkit/error.hpp"
#include "lcdkit/universal.hpp"

using namespace lcdkit;

namespace {

VertexId V(const char* s) { return VertexId(s); }

Immersion wrap_into(const SimplicialComplex& m, const BranchedManifold& w, std::size_t k) {
  std::map<VertexId, VertexId> f;
  for (std::size_t i = 0; i < m.num_vertices(); ++i) {
    f.emplace(VertexId::from_int(static_cast<long long>(i)), VertexId::from_int(static_cast<long long>(i % k)));
  }
  auto imm = is_immersion(m, w, SimplicialMap(m, w.complex, f));
  REQUIRE(imm.has_value());
  return *imm;
}

/// The 3 x 3 grid torus: every vertex has degree 6.
SimplicialComplex torus9() {
  auto v = [](int i, int j) { return VertexId(std::to_string((i % 3) * 3 + j % 3)); };
  std::vector<Simplex> tris;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      tris.push_back(Simplex{v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      tris.push_back(Simplex{v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
  }
  return SimplicialComplex::from_simplices(tris);
}

const std::vector<std::string> cycles_3k{"C3", "C6", "C9", "C12"};

}  // namespace

TEST_CASE("models from a closed triangle") {
  const auto w = closed_manifold_as_branched(catalog::cycle(3));
  const auto c3 = catalog::cycle(3);
  const auto c6 = catalog::cycle(6);
  const auto ms = models_from_branched(w, {{c3, wrap_into(c3, w, 3)}, {c6, wrap_into(c6, w, 3)}});
  CHECK(ms.models.size() == 3);
  CHECK(ms.labeled());
  for (const auto& m : ms.models) CHECK(m.complex.num_vertices() == 3);
  CHECK(models_from_branched(w, {}).models.empty());
}

TEST_CASE("models from the octahedron") {
  const auto oct = catalog::octahedron();
  const auto w = closed_manifold_as_branched(oct);
  const auto id = is_immersion(oct, w, identity_map(oct));
  REQUIRE(id.has_value());
  const auto ms = models_from_branched(w, {{oct, *id}});
  CHECK(ms.models.size() == 6);
  for (const auto& m : ms.models) CHECK(m.complex.num_vertices() == 5);
}

TEST_CASE("universal build for cyclic paths") {
  const auto ms = fixture::cyclic_path_models();
  const auto b = build_universal(ms, {catalog::cycle(3), catalog::cycle(6)});
  CHECK(b.radius == 3);
  CHECK(b.geographies.geographies.size() == 9);
  CHECK(b.w.complex.num_vertices() == 9);
  CHECK(b.report.ok());
  CHECK(b.theta.size() == 2);
  CHECK(geography_overlap_holds(b));
  for (const auto& v : b.q.vertices()) {
    CHECK(b.psi[b.geographies.geography_index(v)] == b.coloring.color_of(v));
  }
  for (const auto& p : b.w.projections) {
    for (const auto& s : p.sheets) CHECK(s.num_vertices() == 3);
  }

  const auto c6 = canonical_immersion(b, catalog::cycle(6));
  CHECK(c6.map.is_isomorphism() == false);
  CHECK(c6.map.image().num_vertices() == 6);
  const auto c3 = canonical_immersion(b, catalog::cycle(3));
  CHECK(c3.map.image().num_vertices() == 3);

  const auto c4 = catalog::cycle(4);
  try {
    canonical_immersion(b, c4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("not saturated") != std::string::npos);
  }

  const auto report = verify_equivalence(ms, b, 12);
  CHECK(report.modeled_names() == cycles_3k);
  CHECK(report.immersed_names() == cycles_3k);
  CHECK(report.agree());
}

TEST_CASE("universal build rejects bad input") {
  const auto ms = fixture::cyclic_path_models();
  CHECK_THROWS_AS(build_universal(ms, {catalog::cycle(4)}), Error);
  CHECK_THROWS_AS(build_universal(ms, {catalog::cycle(3)}, 2), Error);
  CHECK_THROWS_AS(build_universal(ms, {catalog::octahedron()}), Error);
}

TEST_CASE("universal build for the octahedron") {
  const auto ms = fixture::single(fixture::wheel_model(4));
  const auto b = build_universal(ms, {catalog::octahedron()});
  CHECK(b.report.ok());
  CHECK(b.w.complex.num_vertices() == 6);
  CHECK(geography_overlap_holds(b));
  const auto report = verify_equivalence(ms, b, 6);
  REQUIRE(report.modeled_names().size() == 1);
  CHECK(report.modeled_names().front().rfind("S2/6v", 0) == 0);
  CHECK(report.immersed_names() == report.modeled_names());
  CHECK(report.agree());
}

TEST_CASE("universal build for degree-six tori") {
  const auto ms = fixture::single(fixture::wheel_model(6));
  const auto t9 = torus9();
  REQUIRE(is_combinatorial_manifold(t9, 2) == ManifoldStatus::closed_manifold);
  const auto b = build_universal(ms, {catalog::torus7(), t9});
  CHECK(b.report.ok());
  CHECK(b.theta.size() == 2);
  CHECK(geography_overlap_holds(b));
  CHECK(find_immersion(t9, b.w).has_value());
}

TEST_CASE("coverings of a closed manifold") {
  const auto c3 = catalog::cycle(3);
  const auto w = closed_manifold_as_branched(c3);
  const auto ms = models_from_branched(w, {{c3, wrap_into(c3, w, 3)}});
  const auto report = verify_equivalence(ms, w, 12);
  CHECK(report.immersed_names() == cycles_3k);
  CHECK(report.modeled_names() == cycles_3k);
}

TEST_CASE("empty model set") {
  const ModelSet ms{{}, 1};
  const auto b = build_universal(ms, {});
  CHECK(b.w.complex.empty());
  const auto report = verify_equivalence(ms, b, 6);
  CHECK(report.modeled_names().empty());
  CHECK(report.immersed_names().empty());
  CHECK_THROWS_AS(verify_equivalence(ModelSet{{}, 3}, b, 6), Error);
}

TEST_CASE("geography vertex names") {
  CHECK(geography_vertex(4) == V("g4"));
  CHECK(witness_prefix(2) == "q2.");
}
