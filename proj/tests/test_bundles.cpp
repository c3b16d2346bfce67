#include <doctest.h>

#include <deque>
#include <numeric>

#include "lcdkit/bundles.hpp"
#include "lcdkit/error.hpp"
#include "oracles.hpp"

using namespace lcdkit;

namespace {

const Matrix2Z I = Matrix2Z::identity();

MonodromyWord W(const char* s) { return MonodromyWord::parse(s); }

/// All words of the given length, in lexicographic order of letters.
std::vector<MonodromyWord> words_of_length(std::size_t n) {
  std::vector<MonodromyWord> out{MonodromyWord{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<MonodromyWord> next;
    for (const auto& w : out) {
      for (auto l : {Letter::a1, Letter::a2, Letter::a3}) {
        auto x = w;
        x.letters.push_back(l);
        next.push_back(std::move(x));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Shortest word evaluating to c, by breadth-first search up to max_len.
std::optional<MonodromyWord> shortest_word(const Matrix2Z& c, std::size_t max_len) {
  for (std::size_t n = 0; n <= max_len; ++n) {
    for (const auto& w : words_of_length(n)) {
      if (eval_word(w) == c) return w;
    }
  }
  return std::nullopt;
}

Matrix2Z inverse(const Matrix2Z& m) {
  const auto d = m.det();
  return {m.d * d, -m.b * d, -m.c * d, m.a * d};
}

}  // namespace

TEST_CASE("word evaluation") {
  CHECK(eval_word(MonodromyWord{}) == I);
  CHECK(eval_word(W("a2 a2")) == I);
  CHECK(eval_word(W("a3 a3")) == I);
  CHECK(eval_word(W("a1 a1")) == Matrix2Z{1, 2, 0, 1});
  CHECK(eval_word(W("a1 a2")) == Matrix2Z{1, -1, 0, -1});
  CHECK(eval_word(W("a2 a1 a2")) * letter_matrix(Letter::a1) == I);
  CHECK(eval_word(W("a2 a1 a2")) == Matrix2Z{1, -1, 0, 1});
}

TEST_CASE("evaluation is a monoid morphism") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t m = 0; m <= 3; ++m) {
      for (const auto& u : words_of_length(n)) {
        for (const auto& v : words_of_length(m)) {
          auto uv = u;
          uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
          CHECK(eval_word(uv) == eval_word(u) * eval_word(v));
        }
      }
    }
  }
}

TEST_CASE("rotation conjugates the monodromy") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& w : words_of_length(n)) {
      const auto l = letter_matrix(w.letters.front());
      CHECK(eval_word(w.rotated(1)) == inverse(l) * eval_word(w) * l);
      CHECK(eval_word(w.rotated(n)) == eval_word(w));
    }
  }
}

TEST_CASE("word parsing") {
  CHECK(W("a1,a2  a3").to_string() == "a1 a2 a3");
  CHECK(W("").letters.empty());
  CHECK_THROWS_AS(W("a1 a4"), Error);
  CHECK(parse_letter("a3") == Letter::a3);
  CHECK(to_string(Letter::a2) == "a2");
}

TEST_CASE("factorization examples") {
  CHECK(factor_matrix(I).letters.empty());
  CHECK(factor_matrix(Matrix2Z{1, 1, 0, 1}) == W("a1"));
  CHECK_THROWS_AS(factor_matrix(Matrix2Z{2, 0, 0, 1}), Error);
  CHECK_THROWS_AS(factor_matrix(Matrix2Z{0, 0, 0, 0}), Error);

  const Matrix2Z cat{2, 1, 1, 1};
  const auto oracle = shortest_word(cat, 8);
  REQUIRE(oracle.has_value());
  CHECK(eval_word(*oracle) == cat);
  const auto w = factor_matrix(cat);
  CHECK(eval_word(w) == cat);
  CHECK(w.size() >= oracle->size());
  CHECK(factor_matrix(cat) == w);
}

TEST_CASE("factorization is exact on small matrices") {
  std::size_t count = 0;
  for (long long a = -10; a <= 10; ++a) {
    for (long long b = -10; b <= 10; ++b) {
      for (long long c = -10; c <= 10; ++c) {
        for (long long d = -10; d <= 10; ++d) {
          const Matrix2Z m{a, b, c, d};
          const auto det = m.det();
          if (det != 1 && det != -1) continue;
          ++count;
          const auto w = factor_matrix(m);
          if (!(eval_word(w) == m)) FAIL_CHECK("factor failed for " << m.to_string());
        }
      }
    }
  }
  CHECK(count > 0);
}

TEST_CASE("the train track") {
  const auto g = train_track();
  CHECK(g.dim == 1);
  CHECK(g.complex.num_vertices() == 7);
  CHECK(validate_branched(g).ok());
  CHECK(branch_set(g) == SimplicialComplex::from_simplices({Simplex{"x"}}));
  CHECK(branched_boundary(g).empty());
  CHECK(is_nice(g));
  CHECK(g.projections.front().sheets.size() == 9);
}

TEST_CASE("circle immersions for short words") {
  const auto g = train_track();
  std::size_t total = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& w : words_of_length(n)) {
      const auto ci = circle_immersion(w);
      CHECK(ci.cycle.num_vertices() == 3 * n);
      CHECK(is_immersion(ci.cycle, g, ci.immersion.map).has_value());
      ++total;
    }
  }
  CHECK(total == 3 + 9 + 27 + 81 + 243 + 729);
  CHECK_THROWS_AS(circle_immersion(MonodromyWord{}), Error);
}

TEST_CASE("circle immersions satisfy the definition") {
  const auto g = train_track();
  for (const char* s : {"a1", "a1 a1", "a1 a2 a3", "a3 a3 a2"}) {
    const auto ci = circle_immersion(W(s));
    CHECK(oracle::is_immersion_by_definition(ci.cycle, g, ci.immersion.map.vertex_map()));
  }
}

TEST_CASE("rotated words give relabeled certificates") {
  const auto w = W("a1 a2 a3");
  const auto u = circle_immersion(w);
  const auto v = circle_immersion(w.rotated(1));
  const std::size_t n = u.cycle.num_vertices();
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = VertexId::from_int(static_cast<long long>(i));
    const auto b = VertexId::from_int(static_cast<long long>((i + n - 3) % n));
    CHECK(v.immersion.map(b) == u.immersion.map(a));
  }
}

TEST_CASE("double wrap of one loop") {
  const auto ci = circle_immersion(W("a1 a1"));
  CHECK(ci.immersion.map.image().num_vertices() == 3);
}

TEST_CASE("bundle certificates") {
  CHECK(bundle_certificate(W("a1")).monodromy == Matrix2Z{1, 1, 0, 1});
  CHECK(bundle_certificate(W("a3 a3")).monodromy == I);
  const auto d = bundle_certificate(W("a1 a2"));
  CHECK(d.monodromy == Matrix2Z{1, -1, 0, -1});
  CHECK(d.fiber == "T2");
  CHECK(d.base.word == W("a1 a2"));
  CHECK_FALSE(d.covering_relation.empty());
}
