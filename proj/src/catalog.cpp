#include "lcdkit/catalog.hpp"

#include <array>
#include <charconv>

#include "lcdkit/error.hpp"

namespace lcdkit::catalog {

namespace {

VertexId named(std::string_view prefix, std::size_t i) {
  return VertexId(std::string(prefix) + std::to_string(i));
}

SimplicialComplex from_triples(const std::vector<std::array<std::size_t, 3>>& triples,
                               std::string_view prefix) {
  std::vector<Simplex> simplices;
  for (const auto& t : triples) {
    simplices.push_back(Simplex{named(prefix, t[0]), named(prefix, t[1]), named(prefix, t[2])});
  }
  return SimplicialComplex::from_simplices(simplices);
}

std::size_t parse_size(std::string_view text) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error("bad catalog parameter: " + std::string(text));
  }
  return value;
}

}  // namespace

SimplicialComplex point(std::string_view name) {
  const VertexId v{std::string(name)};
  return SimplicialComplex::from_simplices({Simplex{v}});
}

SimplicialComplex cycle(std::size_t n, std::string_view prefix) {
  if (n < 3) throw Error("a simplicial cycle needs at least 3 vertices");
  std::vector<Simplex> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back(Simplex{named(prefix, i), named(prefix, (i + 1) % n)});
  return SimplicialComplex::from_simplices(edges);
}

SimplicialComplex path(std::size_t n, std::string_view prefix) {
  if (n == 0) throw Error("a path needs at least one vertex");
  if (n == 1) return point(std::string(prefix) + "0");
  std::vector<Simplex> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back(Simplex{named(prefix, i), named(prefix, i + 1)});
  return SimplicialComplex::from_simplices(edges);
}

SimplicialComplex simplex(int n, std::string_view prefix) {
  if (n < 0) throw Error("simplex dimension must be nonnegative");
  std::vector<VertexId> vs;
  for (int i = 0; i <= n; ++i) vs.push_back(named(prefix, static_cast<std::size_t>(i)));
  return SimplicialComplex::from_simplices({Simplex(vs)});
}

SimplicialComplex simplex_boundary(int n, std::string_view prefix) {
  const auto full = simplex(n + 1, prefix);
  return SimplicialComplex::from_simplices(full.top_simplices().front().facets());
}

SimplicialComplex octahedron(std::string_view prefix) {
  // poles 0 and 5, equator 1-2-3-4
  return from_triples({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
                       {5, 1, 2}, {5, 2, 3}, {5, 3, 4}, {5, 4, 1}},
                      prefix);
}

SimplicialComplex torus7(std::string_view prefix) {
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < 7; ++i) {
    triples.push_back({i, (i + 1) % 7, (i + 3) % 7});
    triples.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return from_triples(triples, prefix);
}

SimplicialComplex rp2_6(std::string_view prefix) {
  return from_triples({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                       {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}},
                      prefix);
}

SimplicialComplex annulus6(std::string_view prefix) {
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    triples.push_back({i, j, i + 3});
    triples.push_back({j, i + 3, j + 3});
  }
  return from_triples(triples, prefix);
}

SimplicialComplex wheel(std::size_t k, std::string_view prefix) {
  if (k < 3) throw Error("a wheel needs at least 3 spokes");
  const VertexId hub{std::string(prefix) + "h"};
  std::vector<Simplex> triangles;
  for (std::size_t i = 0; i < k; ++i) {
    triangles.push_back(Simplex{hub, VertexId(std::string(prefix) + "r" + std::to_string(i)),
                                VertexId(std::string(prefix) + "r" + std::to_string((i + 1) % k))});
  }
  return SimplicialComplex::from_simplices(triangles);
}

SimplicialComplex triangles_sharing_vertex() {
  return SimplicialComplex::from_simplices({Simplex{"0", "1", "2"}, Simplex{"0", "3", "4"}});
}

SimplicialComplex two_disjoint_edges() {
  return SimplicialComplex::from_simplices({Simplex{"0", "1"}, Simplex{"2", "3"}});
}

SimplicialComplex wedge_of_two_circles() {
  return SimplicialComplex::from_simplices({Simplex{"w", "a1"}, Simplex{"a1", "b1"},
                                            Simplex{"b1", "w"}, Simplex{"w", "a2"},
                                            Simplex{"a2", "b2"}, Simplex{"b2", "w"}});
}

SimplicialComplex by_name(std::string_view name) {
  const auto colon = name.find(':');
  const std::string_view head = name.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? "" : name.substr(colon + 1);
  if (head == "point") return point();
  if (head == "cycle") return cycle(parse_size(arg));
  if (head == "path") return path(parse_size(arg));
  if (head == "simplex") return simplex(static_cast<int>(parse_size(arg)));
  if (head == "sphere") return simplex_boundary(static_cast<int>(parse_size(arg)));
  if (head == "wheel") return wheel(parse_size(arg));
  if (head == "octahedron") return octahedron();
  if (head == "torus7") return torus7();
  if (head == "rp2") return rp2_6();
  if (head == "annulus") return annulus6();
  if (head == "wedge") return wedge_of_two_circles();
  throw Error("unknown catalog complex: " + std::string(name));
}

std::vector<std::string> names() {
  return {"point",      "cycle:N", "path:N", "simplex:N", "sphere:N", "wheel:N",
          "octahedron", "torus7",  "rp2",    "annulus",   "wedge"};
}

}  // namespace lcdkit::catalog
