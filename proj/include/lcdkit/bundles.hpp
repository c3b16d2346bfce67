#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "lcdkit/branched.hpp"

namespace lcdkit {

struct Matrix2Z {
  long long a = 1, b = 0, c = 0, d = 1;

  static Matrix2Z identity() { return {}; }
  long long det() const { return a * d - b * c; }
  std::string to_string() const;

  friend Matrix2Z operator*(const Matrix2Z& x, const Matrix2Z& y);
  friend bool operator==(const Matrix2Z&, const Matrix2Z&) = default;
};

enum class Letter { a1, a2, a3 };

/// a1 = [[1,1],[0,1]], a2 = [[1,0],[0,-1]], a3 = [[0,1],[1,0]].
Matrix2Z letter_matrix(Letter l);
std::string_view to_string(Letter l);
/// Parses "a1", "a2" or "a3"; throws Error otherwise.
Letter parse_letter(std::string_view s);

struct MonodromyWord {
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  /// Space-separated letters.
  std::string to_string() const;
  /// Accepts letters separated by spaces or commas.
  static MonodromyWord parse(std::string_view text);
  /// Cyclic rotation moving the first k letters to the end.
  MonodromyWord rotated(std::size_t k) const;
  friend bool operator==(const MonodromyWord&, const MonodromyWord&) = default;
};

/// Left-to-right product; the empty word gives the identity.
Matrix2Z eval_word(const MonodromyWord& w);

/// Positive word with eval_word(w) = c. Euclid on the bottom row by right
/// multiplication with a1^(+-1), a2, a3; a1^-1 is emitted as a2 a1 a2 and
/// adjacent a2 a2 / a3 a3 pairs are cancelled. Throws Error unless det = +-1.
MonodromyWord factor_matrix(const Matrix2Z& c);

/// The wedge of three circles: vertex "x" and loops x - "<i>a" - "<i>b" - x.
/// The chart at x is the path "in" - "x" - "out"; loop starts map to "out",
/// loop ends to "in", and every (end, x, start) path is a sheet.
BranchedManifold train_track();

struct CircleImmersion {
  MonodromyWord word;
  /// Cycle on 3|w| vertices.
  SimplicialComplex cycle;
  BranchedManifold track;
  Immersion immersion;
};

/// Maps the cycle along the loops named by w and validates the immersion.
/// Throws Error for the empty word.
CircleImmersion circle_immersion(const MonodromyWord& w);

struct BundleDescriptor {
  /// Base circle immersion f: S1 -> Gamma.
  CircleImmersion base;
  Matrix2Z monodromy;
  std::string fiber = "T2";
  /// q o F = f o p, recorded at descriptor level.
  std::string covering_relation;
};

BundleDescriptor bundle_certificate(const MonodromyWord& w);

}  // namespace lcdkit
