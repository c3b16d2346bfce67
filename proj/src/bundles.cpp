#include "lcdkit/bundles.hpp"

#include <cstdlib>

#include "lcdkit/error.hpp"

namespace lcdkit {

std::string Matrix2Z::to_string() const {
  return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," +
         std::to_string(d) + "]]";
}

Matrix2Z operator*(const Matrix2Z& x, const Matrix2Z& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Matrix2Z letter_matrix(Letter l) {
  switch (l) {
    case Letter::a1:
      return {1, 1, 0, 1};
    case Letter::a2:
      return {1, 0, 0, -1};
    case Letter::a3:
      return {0, 1, 1, 0};
  }
  throw InternalError("bad letter");
}

std::string_view to_string(Letter l) {
  switch (l) {
    case Letter::a1:
      return "a1";
    case Letter::a2:
      return "a2";
    case Letter::a3:
      return "a3";
  }
  throw InternalError("bad letter");
}

Letter parse_letter(std::string_view s) {
  if (s == "a1") return Letter::a1;
  if (s == "a2") return Letter::a2;
  if (s == "a3") return Letter::a3;
  throw Error("unknown letter '" + std::string(s) + "' (expected a1, a2 or a3)");
}

std::string MonodromyWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += lcdkit::to_string(letters[i]);
  }
  return out;
}

MonodromyWord MonodromyWord::parse(std::string_view text) {
  MonodromyWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != ',' && text[j] != '\t') ++j;
    if (j > i) w.letters.push_back(parse_letter(text.substr(i, j - i)));
    i = j;
  }
  return w;
}

MonodromyWord MonodromyWord::rotated(std::size_t k) const {
  MonodromyWord w;
  const std::size_t n = letters.size();
  for (std::size_t i = 0; i < n; ++i) w.letters.push_back(letters[(i + k) % n]);
  return w;
}

Matrix2Z eval_word(const MonodromyWord& w) {
  Matrix2Z m = Matrix2Z::identity();
  for (auto l : w.letters) m = m * letter_matrix(l);
  return m;
}

namespace {

/// Right multiplier used while reducing: a letter, or a1^-1.
struct Step {
  Letter letter;
  bool inverse = false;
};

}  // namespace

MonodromyWord factor_matrix(const Matrix2Z& c) {
  const auto det = c.det();
  if (det != 1 && det != -1) throw Error("matrix " + c.to_string() + " has determinant " + std::to_string(det));
  Matrix2Z m = c;
  std::vector<Step> steps;
  auto apply = [&](Step s) {
    Matrix2Z r = letter_matrix(s.letter);
    if (s.inverse) r = {1, -1, 0, 1};
    m = m * r;
    steps.push_back(s);
  };

  // Euclid on the bottom row (c, d): the entry of least absolute value
  // (first on ties) is the pivot; the other one is reduced modulo it.
  while (m.c != 0 && m.d != 0) {
    if (std::llabs(m.c) <= std::llabs(m.d)) {
      const long long k = m.d / m.c;
      for (long long i = 0; i < std::llabs(k); ++i) apply(Step{Letter::a1, k > 0});
    } else {
      apply(Step{Letter::a3});
    }
  }
  if (m.d == 0) apply(Step{Letter::a3});
  if (m.d == -1) apply(Step{Letter::a2});
  if (m.a == -1) {
    apply(Step{Letter::a3});
    apply(Step{Letter::a2});
    apply(Step{Letter::a3});
  }
  const long long y = m.b;
  for (long long i = 0; i < std::llabs(y); ++i) apply(Step{Letter::a1, y > 0});
  if (!(m == Matrix2Z::identity())) throw InternalError("factorization did not reach the identity");

  // c = (product of steps)^-1: reverse and invert each step.
  std::vector<Letter> out;
  auto push = [&](Letter l) {
    if (l != Letter::a1 && !out.empty() && out.back() == l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  };
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->letter != Letter::a1) {
      push(it->letter);
    } else if (it->inverse) {
      push(Letter::a1);
    } else {
      push(Letter::a2);
      push(Letter::a1);
      push(Letter::a2);
    }
  }
  return MonodromyWord{out};
}

namespace {

VertexId loop_start(int i) { return VertexId(std::to_string(i) + "a"); }
VertexId loop_end(int i) { return VertexId(std::to_string(i) + "b"); }

int loop_of(Letter l) { return static_cast<int>(l) + 1; }

}  // namespace

BranchedManifold train_track() {
  const VertexId x("x");
  std::vector<Simplex> edges;
  for (int i = 1; i <= 3; ++i) {
    edges.push_back(Simplex{x, loop_start(i)});
    edges.push_back(Simplex{loop_start(i), loop_end(i)});
    edges.push_back(Simplex{loop_end(i), x});
  }
  BranchedManifold w{SimplicialComplex::from_simplices(edges), {}, 1};

  const VertexId in("in");
  const VertexId out("out");
  LocalProjection px;
  px.domain = closed_star(w.complex, x);
  px.chart = SimplicialComplex::from_simplices({Simplex{in, x}, Simplex{x, out}});
  px.vertex_map.emplace(x, x);
  for (int i = 1; i <= 3; ++i) {
    px.vertex_map.emplace(loop_start(i), out);
    px.vertex_map.emplace(loop_end(i), in);
  }
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      px.sheets.push_back(SimplicialComplex::from_simplices({Simplex{loop_end(i), x}, Simplex{x, loop_start(j)}}));
    }
  }
  w.projections.push_back(std::move(px));

  // loop vertices are manifold points with their own star charts
  const auto chart = SimplicialComplex::from_simplices({Simplex{"p0", "p1"}, Simplex{"p1", "p2"}});
  for (int i = 1; i <= 3; ++i) {
    for (const auto& [v, prev, next] : {std::tuple{loop_start(i), x, loop_end(i)},
                                        std::tuple{loop_end(i), loop_start(i), x}}) {
      LocalProjection p;
      p.domain = closed_star(w.complex, v);
      p.chart = chart;
      p.vertex_map = {{prev, VertexId("p0")}, {v, VertexId("p1")}, {next, VertexId("p2")}};
      p.sheets = {p.domain};
      w.projections.push_back(std::move(p));
    }
  }
  return w;
}

CircleImmersion circle_immersion(const MonodromyWord& w) {
  if (w.letters.empty()) throw Error("a circle immersion needs a nonempty word");
  auto track = train_track();
  const std::size_t n = 3 * w.size();
  std::vector<Simplex> edges;
  std::map<VertexId, VertexId> map;
  for (std::size_t k = 0; k < n; ++k) {
    edges.push_back(Simplex{VertexId::from_int(static_cast<long long>(k)),
                            VertexId::from_int(static_cast<long long>((k + 1) % n))});
    const int loop = loop_of(w.letters[k / 3]);
    const VertexId v = VertexId::from_int(static_cast<long long>(k));
    switch (k % 3) {
      case 0:
        map.emplace(v, VertexId("x"));
        break;
      case 1:
        map.emplace(v, loop_start(loop));
        break;
      default:
        map.emplace(v, loop_end(loop));
        break;
    }
  }
  auto cycle = SimplicialComplex::from_simplices(edges);
  const SimplicialMap f(cycle, track.complex, std::move(map));
  auto check = check_immersion(cycle, track, f);
  if (!check.immersion) throw InternalError("circle map is not an immersion: " + check.reason);
  return CircleImmersion{w, std::move(cycle), std::move(track), std::move(*check.immersion)};
}

BundleDescriptor bundle_certificate(const MonodromyWord& w) {
  const auto monodromy = eval_word(w);
  return BundleDescriptor{circle_immersion(w), monodromy, "T2",
                          "q o F = f o p with f the base immersion of word '" + w.to_string() +
                              "' and monodromy " + monodromy.to_string()};
}

}  // namespace lcdkit
