#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace lcdkit {

/// Opaque vertex token. Ordering is "natural": digit runs compare
/// numerically, so "v2" < "v10". Ties (e.g. "01" vs "1") fall back to the raw
/// string so the order stays total.
class VertexId {
 public:
  VertexId() = default;
  explicit VertexId(std::string name) : name_(std::move(name)) {}
  explicit VertexId(const char* name) : name_(name) {}

  static VertexId from_int(long long value) { return VertexId(std::to_string(value)); }

  const std::string& name() const noexcept { return name_; }

  friend std::strong_ordering operator<=>(const VertexId& a, const VertexId& b);
  friend bool operator==(const VertexId& a, const VertexId& b) { return a.name_ == b.name_; }

 private:
  std::string name_;
};

std::ostream& operator<<(std::ostream& os, const VertexId& v);

/// A simplex is a nonempty, sorted, duplicate-free set of vertices.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the vertices; throws Error on duplicates or an empty list.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices);
  Simplex(std::initializer_list<const char*> names);

  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const VertexId& operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }

  bool contains(const VertexId& v) const;
  bool is_face_of(const Simplex& other) const;

  /// Every nonempty face, including the simplex itself.
  std::vector<Simplex> faces() const;
  /// Codimension-one faces; empty for a vertex.
  std::vector<Simplex> facets() const;
  Simplex without(const VertexId& v) const;
  Simplex with(const VertexId& v) const;

  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);
  friend bool operator==(const Simplex& a, const Simplex& b) = default;

 private:
  struct Trusted {};
  Simplex(Trusted, std::vector<VertexId> sorted) : vertices_(std::move(sorted)) {}

  std::vector<VertexId> vertices_;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);
std::string to_string(const Simplex& s);

}  // namespace lcdkit

template <>
struct std::hash<lcdkit::VertexId> {
  std::size_t operator()(const lcdkit::VertexId& v) const noexcept {
    return std::hash<std::string>{}(v.name());
  }
};
