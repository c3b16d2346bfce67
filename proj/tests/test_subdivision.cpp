#include <doctest.h>

#include "lcdkit/catalog.hpp"
#include "lcdkit/error.hpp"
#include "lcdkit/isomorphism.hpp"
#include "lcdkit/subdivision.hpp"

using namespace lcdkit;

namespace {

VertexId V(const char* s) { return VertexId(s); }

std::vector<VertexId> ids(int n) {
  std::vector<VertexId> out;
  for (int i = 0; i <= n; ++i) out.push_back(VertexId::from_int(i));
  return out;
}

Labeling torus_labels(bool two_classes) {
  const auto t7 = catalog::torus7();
  Labeling lab;
  for (const auto& v : t7.vertices()) lab.vertex_labels.emplace(v, std::stoi(v.name()) % 2 ? "odd" : "even");
  for (int i = 0; i < 7; ++i) {
    const auto a = VertexId::from_int(i);
    lab.simplex_labels.emplace(Simplex{a, VertexId::from_int((i + 1) % 7), VertexId::from_int((i + 3) % 7)}, "A");
    lab.simplex_labels.emplace(Simplex{a, VertexId::from_int((i + 2) % 7), VertexId::from_int((i + 3) % 7)},
                               two_classes ? "B" : "A");
  }
  return lab;
}

void check_roundtrip(const SimplicialComplex& m, const Labeling& lab) {
  const auto fam = build_family(m.dim(), simplex_classes(m, lab));
  const auto rec = encode(m, lab, fam);
  const auto back = decode(rec.result, fam);
  CHECK(back.complex == m);
  CHECK(back.labeling == lab);

  // pairwise block intersections are single common boundary simplices
  const auto bl = blocks(rec);
  std::vector<std::pair<Simplex, SimplicialComplex>> list(bl.begin(), bl.end());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      const auto meet = complex_intersection(list[i].second, list[j].second);
      if (meet.empty()) continue;
      const auto maxs = meet.maximal_simplices();
      REQUIRE(maxs.size() == 1);
      CHECK(maxs[0].is_face_of(list[i].first));
      CHECK(maxs[0].is_face_of(list[j].first));
    }
  }

  // any incident block decodes a vertex to the same label
  for (const auto& [orig, block] : bl) {
    for (const auto& v : orig) {
      const auto got = fam.label_for_degree(degree(block, v));
      const Label* want = lab.vertex_label(v);
      CHECK(got.has_value() == (want != nullptr));
      if (got && want) CHECK(*got == *want);
    }
  }
}

}  // namespace

TEST_CASE("stellar subdivision") {
  const auto tri = catalog::simplex(2);
  const auto r = stellar_subdivide(tri, Simplex{"0", "1", "2"});
  CHECK(r.result.f_vector()[2] == 3);
  REQUIRE(r.new_vertices.size() == 1);
  CHECK(degree(r.result, *r.new_vertices.begin()) == 3);
  CHECK(boundary_complex(r.result) == boundary_complex(tri));

  const auto tet = catalog::simplex(3);
  CHECK(stellar_subdivide(tet, Simplex{"0", "1", "2", "3"}).result.f_vector()[3] == 4);

  const auto oct = catalog::octahedron();
  const auto ro = stellar_subdivide(oct, Simplex{"0", "1", "2"});
  CHECK(ro.result.euler_characteristic() == 2);
  CHECK(ro.result.f_vector() == std::vector<std::size_t>{7, 15, 10});
  for (const auto& [s, orig] : ro.simplex_origin) CHECK(s.dim() == 2);

  CHECK_THROWS_AS(stellar_subdivide(tri, Simplex{"0", "1"}), Error);
  CHECK_THROWS_AS(stellar_subdivide(catalog::simplex(1), Simplex{"0", "1"}), Error);
  CHECK_THROWS_AS(stellar_subdivide(tri, Simplex{"0", "1", "2"}, V("1")), Error);
}

TEST_CASE("chain subdivision") {
  const auto tri = catalog::simplex(2);
  const Simplex sigma{"0", "1", "2"};
  const Simplex tau{"0", "1"};
  CHECK(chain_subdivide(tri, sigma, tau, 1).result == stellar_subdivide(tri, sigma).result);
  const auto r = chain_subdivide(tri, sigma, tau, 3);
  CHECK(r.new_vertices.size() == 3);
  CHECK(r.result.f_vector()[2] == 7);
  CHECK(degree(r.result, V("0")) == 2 + 3);
  CHECK(degree(r.result, V("1")) == 2 + 3);
  CHECK(degree(r.result, V("2")) == 2 + 1);
  CHECK(r.result.euler_characteristic() == 1);
  CHECK_THROWS_AS(chain_subdivide(tri, sigma, Simplex{"0"}, 2), Error);
  CHECK_THROWS_AS(chain_subdivide(tri, sigma, Simplex{"0", "3"}, 2), Error);
}

TEST_CASE("expected boundary degree") {
  CHECK(expected_boundary_degree(2, 1, 0) == 8);
  CHECK(expected_boundary_degree(2, 1, 1) == 7);
  CHECK(expected_boundary_degree(2, 1, 2) == 6);
  CHECK(expected_boundary_degree(2, 5, 0) == 16);
  CHECK(expected_boundary_degree(3, 2, 3) == 13);
  CHECK_THROWS_AS(expected_boundary_degree(2, 1, 3), Error);
  CHECK_THROWS_AS(expected_boundary_degree(2, 0, 0), Error);
}

TEST_CASE("standard subdivision certificates") {
  for (int n = 2; n <= 3; ++n) {
    const auto sigma = catalog::simplex(n);
    for (std::size_t big_n = 1; big_n <= 5; ++big_n) {
      const auto r = standard_subdivide(sigma, ids(n), big_n);
      for (int j = 0; j <= n; ++j) {
        CHECK(degree(r.result, VertexId::from_int(j)) == expected_boundary_degree(n, big_n, j));
      }
      std::size_t max_interior = 0;
      for (const auto& v : r.new_vertices) max_interior = std::max(max_interior, degree(r.result, v));
      CHECK(max_interior == static_cast<std::size_t>(2 * n + 2));
      std::size_t expected_new = 1;
      for (int i = 0; i <= n; ++i) expected_new += big_n + static_cast<std::size_t>(i);
      CHECK(r.new_vertices.size() == expected_new);
      CHECK(r.result.euler_characteristic() == 1);
      CHECK(boundary_complex(r.result) == catalog::simplex_boundary(n - 1));
      CHECK(count_automorphisms(r.result) == 1);
    }
  }
  const auto fig = standard_subdivide(catalog::simplex(2), ids(2), 1, "");
  CHECK(degree(fig.result, V("x0")) == 6);
  CHECK(fig.new_vertices.size() == 7);
}

TEST_CASE("standard subdivision keeps other simplices") {
  const auto oct = catalog::octahedron();
  const auto r = standard_subdivide(oct, {V("0"), V("1"), V("2")}, 2);
  CHECK(r.result.euler_characteristic() == 2);
  CHECK(is_combinatorial_manifold(r.result, 2) == ManifoldStatus::closed_manifold);
  CHECK(r.result.contains(Simplex{"5", "3", "4"}));
  CHECK_FALSE(r.result.contains(Simplex{"0", "1", "2"}));
}

TEST_CASE("family parameters") {
  const SimplexClass a{{std::nullopt, std::nullopt, std::nullopt}, "a"};
  const SimplexClass b{{std::nullopt, std::nullopt, std::nullopt}, "b"};
  const auto one = build_family(2, {a});
  REQUIRE(one.entries.size() == 1);
  CHECK(one.entries[0].big_n == 2);
  CHECK(one.lambda == 6);
  CHECK(one.entries[0].boundary_degrees == std::vector<std::size_t>{10, 9, 8});

  const auto two = build_family(2, {b, a});
  REQUIRE(two.entries.size() == 2);
  CHECK(two.entries[0].key == a);
  CHECK(two.entries[0].boundary_degrees == std::vector<std::size_t>{10, 9, 8});
  CHECK(two.entries[1].big_n == 5);
  CHECK(two.entries[1].boundary_degrees == std::vector<std::size_t>{16, 15, 14});

  CHECK(build_family(2, {}).entries.empty());
  CHECK_THROWS_AS(build_family(1, {}), Error);

  const auto three = build_family(3, {SimplexClass{{"p", "p", "q", "q"}, std::nullopt}});
  for (auto d : three.entries[0].boundary_degrees) CHECK(d > three.lambda);
}

TEST_CASE("codec on a single labeled triangle") {
  const auto tri = catalog::simplex(2);
  Labeling lab;
  lab.vertex_labels = {{V("0"), "q"}, {V("1"), "p"}, {V("2"), "q"}};
  lab.simplex_labels = {{Simplex{"0", "1", "2"}, "T"}};
  const auto fam = build_family(2, simplex_classes(tri, lab));
  const auto rec = encode(tri, lab, fam);
  CHECK(rec.result.num_vertices() == 3 + 10);
  // codec order is (p:1), (q:0), (q:2)
  CHECK(degree(rec.result, V("1")) == 10);
  CHECK(degree(rec.result, V("0")) == 9);
  CHECK(degree(rec.result, V("2")) == 8);
  check_roundtrip(tri, lab);
}

TEST_CASE("codec on the labeled torus") {
  for (bool two : {false, true}) {
    const auto t7 = catalog::torus7();
    const auto lab = torus_labels(two);
    const auto fam = build_family(2, simplex_classes(t7, lab));
    const auto rec = encode(t7, lab, fam);
    CHECK(blocks(rec).size() == 14);
    std::size_t expected = 7;
    for (const auto& s : t7.top_simplices()) {
      const auto* e = fam.find(simplex_class(s, lab));
      REQUIRE(e != nullptr);
      expected += e->block.num_vertices() - 3;
    }
    CHECK(rec.result.num_vertices() == expected);
    CHECK(is_combinatorial_manifold(rec.result, 2) == ManifoldStatus::closed_manifold);
    CHECK(rec.result.euler_characteristic() == 0);
    check_roundtrip(t7, lab);
  }
}

TEST_CASE("codec on a disk and a two-class octahedron") {
  const auto disk = catalog::wheel(6);
  Labeling dl;
  dl.vertex_labels.emplace(V("h"), "hub");
  check_roundtrip(disk, dl);

  const auto oct = catalog::octahedron();
  Labeling ol;
  for (const auto& s : oct.top_simplices()) ol.simplex_labels.emplace(s, s.contains(V("0")) ? "north" : "south");
  check_roundtrip(oct, ol);
  check_roundtrip(oct, Labeling{});
}

TEST_CASE("decode failures") {
  const SimplexClass a{{std::nullopt, std::nullopt, std::nullopt}, std::nullopt};
  const auto fam = build_family(2, {a});
  try {
    decode(catalog::octahedron(), fam);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("not covered") != std::string::npos);
  }
  CHECK_THROWS_AS(decode(catalog::torus7(), fam), Error);
  CHECK_THROWS_AS(decode(catalog::octahedron(), build_family(2, {})), Error);

  // a block from another family does not decode
  const auto other = build_family(2, {SimplexClass{{std::nullopt, std::nullopt, std::nullopt}, "x"},
                                      SimplexClass{{std::nullopt, std::nullopt, std::nullopt}, "y"}});
  Labeling yl;
  yl.simplex_labels.emplace(Simplex{"0", "1", "2"}, "y");
  const auto enc = encode(catalog::simplex(2), yl, other);
  CHECK_THROWS_AS(decode(enc.result, fam), Error);

  // unmatched class at encode time
  Labeling zl;
  zl.simplex_labels.emplace(Simplex{"0", "1", "2"}, "z");
  CHECK_THROWS_AS(encode(catalog::simplex(2), zl, fam), Error);
}

TEST_CASE("family from a model set") {
  ModelSet ms;
  ms.dim = 2;
  Labeling lab;
  lab.vertex_labels.emplace(V("h"), "c");
  ms.models.push_back(LocalModel{catalog::wheel(4), V("h"), lab, 2});
  ms.models.push_back(LocalModel{catalog::wheel(5), V("h"), std::nullopt, 2});
  const auto fam = build_family(ms);
  CHECK(fam.entries.size() == 2);
}
