#include <doctest.h>

#include <chrono>

#include "fixtures.hpp"
#include "lcdkit/catalog.hpp"
#include "lcdkit/error.hpp"
#include "lcdkit/isomorphism.hpp"
#include "lcdkit/model.hpp"
#include "oracles.hpp"

using namespace lcdkit;

namespace {

VertexId V(const char* s) { return VertexId(s); }

}  // namespace

TEST_CASE("local model validation") {
  CHECK(validate_local_model(fixture::wheel_model(6)) == Validity::valid);
  CHECK(validate_local_model(LocalModel{catalog::simplex_boundary(2), V("0"), std::nullopt, 2}) ==
        Validity::invalid);
  for (int n = 0; n <= 3; ++n) {
    CHECK(validate_local_model(LocalModel{catalog::simplex(n), V("0"), std::nullopt, n}) == Validity::valid);
  }
  CHECK(validate_local_model(LocalModel{catalog::simplex(4), V("0"), std::nullopt, 4}) == Validity::unknown);
  CHECK(validate_local_model(LocalModel{catalog::annulus6(), V("0"), std::nullopt, 2}) == Validity::invalid);
  CHECK(validate_local_model(LocalModel{catalog::wheel(4), V("q"), std::nullopt, 2}) == Validity::invalid);
  CHECK(validate_local_model(fixture::path3_model()) == Validity::valid);
}

TEST_CASE("model neighborhoods") {
  const auto c6 = catalog::cycle(6);
  const auto f = find_model_neighborhood(c6, nullptr, V("2"), fixture::path3_model());
  REQUIRE(f.has_value());
  CHECK((*f)(V("1")) == V("2"));
  CHECK(closed_star(c6, V("2")).is_subcomplex_of(f->image()));

  CHECK_FALSE(find_model_neighborhood(catalog::octahedron(), nullptr, V("0"), fixture::wheel_model(6)));
  const auto t7 = catalog::torus7();
  const auto g = find_model_neighborhood(t7, nullptr, V("4"), fixture::wheel_model(6));
  REQUIRE(g.has_value());
  CHECK(closed_star(t7, V("4")) == g->image());
}

TEST_CASE("modeled-on examples") {
  const auto c6 = catalog::cycle(6);
  const auto ms = fixture::single(fixture::path3_model());
  const auto cert = is_modeled_on(c6, ms);
  REQUIRE(cert.has_value());
  CHECK(check_certificate(c6, ms, *cert));

  CHECK_FALSE(is_modeled_on(catalog::octahedron(), fixture::single(fixture::wheel_model(6))));
  const auto t7 = catalog::torus7();
  const auto w6 = fixture::single(fixture::wheel_model(6));
  const auto tc = is_modeled_on(t7, w6);
  REQUIRE(tc.has_value());
  CHECK(check_certificate(t7, w6, *tc));
  CHECK(is_modeled_on(catalog::octahedron(), fixture::single(fixture::wheel_model(4))));
}

TEST_CASE("labeled modeling by cyclic paths") {
  const auto ms = fixture::cyclic_path_models();
  for (std::size_t n = 3; n <= 9; ++n) {
    const auto c = catalog::cycle(n);
    const auto cert = is_modeled_on(c, ms);
    CHECK(cert.has_value() == (n % 3 == 0));
    if (cert) {
      CHECK(check_certificate(c, ms, *cert));
      REQUIRE(cert->labeling.has_value());
      CHECK(cert->labeling->vertex_labels.size() == n);
    }
  }
  // a fixed labeling that breaks the pattern
  auto bad = fixture::cyclic_labels(6);
  bad.vertex_labels[V("3")] = "2";
  CHECK_FALSE(is_modeled_on(catalog::cycle(6), ms, &bad));
  const auto good = fixture::cyclic_labels(6);
  CHECK(is_modeled_on(catalog::cycle(6), ms, &good));
}

TEST_CASE("modeled-on agrees with brute force on the small corpus") {
  std::vector<std::pair<std::string, ModelSet>> sets = {
      {"path3", fixture::single(fixture::path3_model())},
      {"wheel4", fixture::single(fixture::wheel_model(4))},
      {"wheel6", fixture::single(fixture::wheel_model(6))},
      {"cyclic", fixture::cyclic_path_models()},
  };
  ModelSet mixed;
  mixed.dim = 2;
  mixed.models = {fixture::wheel_model(4), fixture::wheel_model(5), fixture::wheel_model(3)};
  sets.emplace_back("wheels345", mixed);
  ModelSet bigger;
  bigger.dim = 1;
  bigger.models = {LocalModel{catalog::path(5), V("2"), std::nullopt, 1}};
  sets.emplace_back("path5", bigger);

  for (const auto& [cname, k] : fixture::small_corpus()) {
    for (const auto& [mname, ms] : sets) {
      if (ms.labeled() && k.num_vertices() > 8) continue;
      INFO(cname << " on " << mname);
      const auto cert = is_modeled_on(k, ms);
      CHECK(cert.has_value() == oracle::is_modeled_on_brute(k, ms));
      if (cert) CHECK(check_certificate(k, ms, *cert));
    }
  }
}

TEST_CASE("closed manifold enumeration") {
  EnumerationOptions opts;
  opts.max_vertices = 5;
  const auto cycles = enumerate_closed_manifolds(1, opts);
  REQUIRE(cycles.size() == 3);
  CHECK(manifold_name(cycles[0]) == "C3");
  CHECK(manifold_name(cycles[2]) == "C5");

  // numbers of connected closed surfaces with 4..8 vertices: 1, 1, 3, 9, 43
  opts.max_vertices = 8;
  const auto start = std::chrono::steady_clock::now();
  const auto surfaces = enumerate_closed_manifolds(2, opts);
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  MESSAGE("surface enumeration up to 8 vertices: " << secs << " s");
  std::map<std::size_t, std::size_t> by_size;
  std::map<std::string, std::size_t> by_name;
  for (const auto& s : surfaces) {
    ++by_size[s.num_vertices()];
    ++by_name[manifold_name(s)];
  }
  CHECK(by_size == std::map<std::size_t, std::size_t>{{4, 1}, {5, 1}, {6, 3}, {7, 9}, {8, 43}});
  CHECK(by_name["T2"] == 8);
  CHECK(by_name["K2"] == 6);
  CHECK(by_name["RP2"] == 20);
  CHECK(by_name["S2"] == 23);
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    for (std::size_t j = i + 1; j < surfaces.size(); ++j) {
      if (surfaces[i].f_vector() == surfaces[j].f_vector()) {
        CHECK_FALSE(find_isomorphism(surfaces[i], surfaces[j]).has_value());
      }
    }
  }
  CHECK_THROWS_AS(enumerate_closed_manifolds(3, opts), Error);
}

TEST_CASE("enumerate modeled") {
  const auto cycles = enumerate_modeled(fixture::single(fixture::path3_model()), 5);
  REQUIRE(cycles.size() == 3);
  const auto oct = enumerate_modeled(fixture::single(fixture::wheel_model(4)), 6);
  REQUIRE(oct.size() == 1);
  CHECK(find_isomorphism(oct[0], catalog::octahedron()).has_value());
  CHECK(enumerate_modeled(ModelSet{{}, 2}, 6).empty());

  const auto cyclic = enumerate_modeled(fixture::cyclic_path_models(), 12);
  std::vector<std::size_t> sizes;
  for (const auto& c : cyclic) sizes.push_back(c.num_vertices());
  CHECK(sizes == std::vector<std::size_t>{3, 6, 9, 12});

  const auto tori = enumerate_modeled(fixture::single(fixture::wheel_model(6)), 7);
  REQUIRE(tori.size() == 1);
  CHECK(manifold_name(tori[0]) == "T2");
}

TEST_CASE("manifold names") {
  CHECK(manifold_name(catalog::octahedron()) == "S2");
  CHECK(manifold_name(catalog::torus7()) == "T2");
  CHECK(manifold_name(catalog::rp2_6()) == "RP2");
  CHECK(manifold_name(catalog::cycle(4)) == "C4");
  CHECK_THROWS_AS(manifold_name(catalog::annulus6()), Error);
}
