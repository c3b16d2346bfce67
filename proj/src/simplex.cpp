#include "lcdkit/simplex.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lcdkit/error.hpp"

namespace lcdkit {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Compares digit runs by numeric value without converting (runs may be long).
std::strong_ordering compare_digit_runs(std::string_view a, std::string_view b) {
  auto strip = [](std::string_view s) {
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] == '0') ++i;
    return s.substr(i);
  };
  const auto sa = strip(a);
  const auto sb = strip(b);
  if (sa.size() != sb.size()) return sa.size() <=> sb.size();
  const int c = sa.compare(sb);
  return c <=> 0;
}

}  // namespace

std::strong_ordering operator<=>(const VertexId& a, const VertexId& b) {
  const std::string_view x = a.name_;
  const std::string_view y = b.name_;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    if (is_digit(x[i]) && is_digit(y[j])) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < x.size() && is_digit(x[ie])) ++ie;
      while (je < y.size() && is_digit(y[je])) ++je;
      const auto c = compare_digit_runs(x.substr(i, ie - i), y.substr(j, je - j));
      if (c != 0) return c;
      i = ie;
      j = je;
    } else {
      if (x[i] != y[j]) return static_cast<unsigned char>(x[i]) <=> static_cast<unsigned char>(y[j]);
      ++i;
      ++j;
    }
  }
  const auto rest = (x.size() - i) <=> (y.size() - j);
  if (rest != 0) return rest;
  const int c = x.compare(y);
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const VertexId& v) { return os << v.name(); }

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error("simplex must have at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error("simplex has a repeated vertex: " + to_string(*this));
  }
}

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices)) {}

Simplex::Simplex(std::initializer_list<const char*> names)
    : Simplex([&] {
        std::vector<VertexId> vs;
        vs.reserve(names.size());
        for (const char* n : names) vs.emplace_back(n);
        return vs;
      }()) {}

bool Simplex::contains(const VertexId& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

std::vector<Simplex> Simplex::faces() const {
  const std::size_t k = vertices_.size();
  std::vector<Simplex> out;
  out.reserve((std::size_t{1} << k) - 1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<VertexId> vs;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) vs.push_back(vertices_[i]);
    }
    out.push_back(Simplex(Trusted{}, std::move(vs)));
  }
  return out;
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    std::vector<VertexId> vs;
    vs.reserve(vertices_.size() - 1);
    for (std::size_t j = 0; j < vertices_.size(); ++j) {
      if (j != i) vs.push_back(vertices_[j]);
    }
    out.push_back(Simplex(Trusted{}, std::move(vs)));
  }
  return out;
}

Simplex Simplex::without(const VertexId& v) const {
  std::vector<VertexId> vs;
  for (const auto& w : vertices_) {
    if (w != v) vs.push_back(w);
  }
  if (vs.size() == vertices_.size()) throw Error("vertex " + v.name() + " not in " + to_string(*this));
  if (vs.empty()) throw Error("removing the only vertex of a simplex");
  return Simplex(Trusted{}, std::move(vs));
}

Simplex Simplex::with(const VertexId& v) const {
  std::vector<VertexId> vs = vertices_;
  vs.push_back(v);
  return Simplex(std::move(vs));
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
  return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                b.vertices_.begin(), b.vertices_.end());
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  return os << '}';
}

std::string to_string(const Simplex& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

}  // namespace lcdkit
