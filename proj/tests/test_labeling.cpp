#include <doctest.h>

#include <random>

#include "lcdkit/catalog.hpp"
#include "lcdkit/error.hpp"
#include "lcdkit/labeling.hpp"
#include "oracles.hpp"

using namespace lcdkit;

namespace {

VertexId V(const char* s) { return VertexId(s); }

std::vector<SimplicialComplex> fixtures() {
  return {catalog::cycle(6),    catalog::cycle(7),  catalog::path(5),     catalog::octahedron(),
          catalog::torus7(),    catalog::annulus6(), catalog::wheel(5),   catalog::rp2_6(),
          catalog::wedge_of_two_circles(), catalog::two_disjoint_edges()};
}

}  // namespace

TEST_CASE("greedy coloring of the hexagon") {
  const auto c6 = catalog::cycle(6);
  const auto col = compute_d_coloring(c6, 1);
  std::vector<Color> got;
  for (const auto& v : c6.vertices()) got.push_back(col.color_of(v));
  CHECK(got == std::vector<Color>{1, 2, 3, 1, 2, 3});
  CHECK(col.num_colors() == 3);
  CHECK(is_d_coloring(c6, col, 1));
  CHECK_FALSE(is_d_coloring(c6, col, 2));
}

TEST_CASE("d-coloring agrees with the definition on random colorings") {
  std::mt19937 rng(7);
  for (const auto& k : fixtures()) {
    for (std::size_t d = 0; d <= 2; ++d) {
      for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> pick(1, static_cast<int>(k.num_vertices()));
        Labeling lab;
        for (const auto& v : k.vertices()) lab.vertex_labels.emplace(v, std::to_string(pick(rng)));
        CHECK(is_d_coloring(k, lab, d) == oracle::is_d_coloring_by_definition(k, lab, d));
      }
      const auto greedy = compute_d_coloring(k, d);
      CHECK(oracle::is_d_coloring_by_definition(k, greedy.to_labeling(), d));
    }
  }
}

TEST_CASE("partial colorings are rejected") {
  Labeling lab;
  lab.vertex_labels.emplace(V("0"), "a");
  CHECK_THROWS_AS(is_d_coloring(catalog::cycle(3), lab, 1), Error);
}

TEST_CASE("geographies of the hexagon") {
  const auto c6 = catalog::cycle(6);
  const auto col = compute_d_coloring(c6, 1);
  const auto g = geographize(c6, col, 1);
  CHECK(g.geographies.size() == 3);
  CHECK(g.geography_index(V("0")) == g.geography_index(V("3")));
  CHECK(g.geography_index(V("0")) != g.geography_index(V("1")));
  const auto& geo = g.labeling.geography_of.at(V("0"));
  CHECK(geo.center_color == 1);
  CHECK(geo.chart.num_vertices() == 3);
  CHECK(geo.chart.contains(Simplex{color_vertex(1), color_vertex(2)}));
  CHECK(geo.chart.contains(Simplex{color_vertex(1), color_vertex(3)}));

  const auto t = geography_transport(c6, g.labeling, V("0"), V("3"));
  CHECK(t(V("0")) == V("3"));
  CHECK(t(V("1")) == V("4"));
  CHECK(t(V("5")) == V("2"));
  CHECK_THROWS_AS(geography_transport(c6, g.labeling, V("0"), V("1")), Error);
}

TEST_CASE("geographize rejects an invalid coloring") {
  const auto c6 = catalog::cycle(6);
  Coloring bad;
  bad.radius = 1;
  for (int i = 0; i < 6; ++i) bad.colors.emplace(VertexId::from_int(i), i % 2 + 1);
  CHECK_THROWS_AS(geographize(c6, bad, 1), Error);
}

TEST_CASE("geographies are preserved by transport") {
  for (const auto& k : fixtures()) {
    const auto col = compute_d_coloring(k, 1);
    const auto g = geographize(k, col, 1);
    for (const auto& u : k.vertices()) {
      for (const auto& v : k.vertices()) {
        if (g.geography_index(u) != g.geography_index(v)) continue;
        const auto t = geography_transport(k, g.labeling, u, v);
        CHECK(t.is_isomorphism());
        CHECK(t(u) == v);
        for (const auto& [w, w2] : t.vertex_map()) CHECK(col.color_of(w) == col.color_of(w2));
      }
    }
  }
}

TEST_CASE("labeling helpers") {
  const auto tri = catalog::simplex(2);
  Labeling lab;
  lab.vertex_labels.emplace(V("0"), "x");
  lab.simplex_labels.emplace(Simplex{"0", "1", "2"}, "t");
  CHECK_NOTHROW(lab.check_domain(tri));
  CHECK(lab.alphabet() == std::set<Label>{"t", "x"});
  lab.simplex_labels.emplace(Simplex{"0", "1"}, "edge");
  CHECK_THROWS_AS(lab.check_domain(tri), Error);
}
