#include "lcdkit/labeling.hpp"

#include <algorithm>
#include <deque>

#include "lcdkit/error.hpp"

namespace lcdkit {

namespace {

using Index = SimplicialComplex::Index;

// Vertices within distance `radius` of `source` (excluding source).
std::vector<Index> ball_around(const SimplicialComplex& k, Index source, std::size_t radius) {
  std::vector<std::size_t> dist(k.num_vertices(), static_cast<std::size_t>(-1));
  std::vector<Index> out;
  std::deque<Index> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Index u = queue.front();
    queue.pop_front();
    if (dist[u] == radius) continue;
    for (Index w : k.neighbors(u)) {
      if (dist[w] != static_cast<std::size_t>(-1)) continue;
      dist[w] = dist[u] + 1;
      out.push_back(w);
      queue.push_back(w);
    }
  }
  return out;
}

}  // namespace

const Label* Labeling::vertex_label(const VertexId& v) const {
  auto it = vertex_labels.find(v);
  return it == vertex_labels.end() ? nullptr : &it->second;
}

const Label* Labeling::simplex_label(const Simplex& s) const {
  auto it = simplex_labels.find(s);
  return it == simplex_labels.end() ? nullptr : &it->second;
}

std::set<Label> Labeling::alphabet() const {
  std::set<Label> out;
  for (const auto& [v, l] : vertex_labels) out.insert(l);
  for (const auto& [s, l] : simplex_labels) out.insert(l);
  return out;
}

void Labeling::check_domain(const SimplicialComplex& k) const {
  for (const auto& [v, l] : vertex_labels) {
    if (!k.contains(v)) throw Error("label on unknown vertex " + v.name());
  }
  for (const auto& [s, l] : simplex_labels) {
    if (!k.contains(s) || s.dim() != k.dim()) {
      throw Error("label on " + to_string(s) + ", which is not a top simplex");
    }
  }
}

Labeling Labeling::restricted_to(const SimplicialComplex& sub) const {
  Labeling out;
  for (const auto& [v, l] : vertex_labels) {
    if (sub.contains(v)) out.vertex_labels.emplace(v, l);
  }
  for (const auto& [s, l] : simplex_labels) {
    if (sub.contains(s) && s.dim() == sub.dim()) out.simplex_labels.emplace(s, l);
  }
  return out;
}

Color Coloring::color_of(const VertexId& v) const {
  auto it = colors.find(v);
  if (it == colors.end()) throw Error("vertex " + v.name() + " has no color");
  return it->second;
}

std::size_t Coloring::num_colors() const {
  std::set<Color> used;
  for (const auto& [v, c] : colors) used.insert(c);
  return used.size();
}

Labeling Coloring::to_labeling() const {
  Labeling out;
  for (const auto& [v, c] : colors) out.vertex_labels.emplace(v, std::to_string(c));
  return out;
}

VertexId color_vertex(Color c) { return VertexId::from_int(c); }

bool operator==(const Geography& a, const Geography& b) {
  return a.center_color == b.center_color && a.radius == b.radius && a.chart == b.chart;
}

bool operator<(const Geography& a, const Geography& b) {
  if (a.center_color != b.center_color) return a.center_color < b.center_color;
  if (a.radius != b.radius) return a.radius < b.radius;
  const auto& sa = a.chart.simplices();
  const auto& sb = b.chart.simplices();
  return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

std::size_t Geographized::geography_index(const VertexId& v) const {
  const auto it = labeling.geography_of.find(v);
  if (it == labeling.geography_of.end()) throw Error("unknown vertex: " + v.name());
  const auto pos = std::lower_bound(geographies.begin(), geographies.end(), it->second);
  return static_cast<std::size_t>(pos - geographies.begin());
}

bool is_d_coloring(const SimplicialComplex& k, const Labeling& colors, std::size_t d) {
  std::vector<const Label*> label(k.num_vertices());
  for (Index i = 0; i < k.num_vertices(); ++i) {
    label[i] = colors.vertex_label(k.vertex(i));
    if (!label[i]) throw Error("coloring is partial: vertex " + k.vertex(i).name() + " has no color");
  }
  for (Index i = 0; i < k.num_vertices(); ++i) {
    for (Index j : ball_around(k, i, 2 * d)) {
      if (*label[j] == *label[i]) return false;
    }
  }
  return true;
}

bool is_d_coloring(const SimplicialComplex& k, const Coloring& colors, std::size_t d) {
  return is_d_coloring(k, colors.to_labeling(), d);
}

Coloring compute_d_coloring(const SimplicialComplex& k, std::size_t d) {
  std::vector<Color> color(k.num_vertices(), 0);
  Coloring out;
  out.radius = d;
  for (Index i = 0; i < k.num_vertices(); ++i) {
    std::set<Color> taken;
    for (Index j : ball_around(k, i, 2 * d)) {
      if (color[j]) taken.insert(color[j]);
    }
    Color c = 1;
    while (taken.contains(c)) ++c;
    color[i] = c;
    out.colors.emplace(k.vertex(i), c);
  }
  return out;
}

namespace {

Geography geography_unchecked(const SimplicialComplex& k, const Coloring& colors, const VertexId& v,
                              std::size_t d) {
  const auto nbhd = neighborhood(k, v, d);
  std::map<VertexId, VertexId> rename;
  for (const auto& w : nbhd.vertices()) rename.emplace(w, color_vertex(colors.color_of(w)));
  return Geography{colors.color_of(v), relabel(nbhd, rename), d};
}

void require_coloring(const SimplicialComplex& k, const Coloring& colors, std::size_t d) {
  if (!is_d_coloring(k, colors, d)) throw Error("not a valid d-coloring for d = " + std::to_string(d));
}

}  // namespace

Geography compute_geography(const SimplicialComplex& k, const Coloring& colors, const VertexId& v,
                            std::size_t d) {
  if (!k.contains(v)) throw Error("unknown vertex: " + v.name());
  require_coloring(k, colors, d);
  return geography_unchecked(k, colors, v, d);
}

Geographized geographize(const SimplicialComplex& k, const Coloring& colors, std::size_t d) {
  require_coloring(k, colors, d);
  Geographized out;
  out.labeling.coloring = colors;
  out.labeling.coloring.radius = d;
  std::set<Geography> distinct;
  for (const auto& v : k.vertices()) {
    auto g = geography_unchecked(k, colors, v, d);
    distinct.insert(g);
    out.labeling.geography_of.emplace(v, std::move(g));
  }
  out.geographies.assign(distinct.begin(), distinct.end());
  return out;
}

SimplicialMap geography_transport(const SimplicialComplex& k, const GeographyLabeling& gl,
                                  const VertexId& u, const VertexId& v) {
  const auto gu = gl.geography_of.find(u);
  const auto gv = gl.geography_of.find(v);
  if (gu == gl.geography_of.end() || gv == gl.geography_of.end()) {
    throw Error("geography_transport: vertex without geography");
  }
  if (!(gu->second == gv->second)) {
    throw Error("geography_transport: geographies of " + u.name() + " and " + v.name() + " differ");
  }
  const std::size_t d = gu->second.radius;
  const auto nu = neighborhood(k, u, d);
  const auto nv = neighborhood(k, v, d);
  std::map<Color, VertexId> by_color;
  for (const auto& w : nv.vertices()) by_color.emplace(gl.coloring.color_of(w), w);
  std::map<VertexId, VertexId> m;
  for (const auto& w : nu.vertices()) m.emplace(w, by_color.at(gl.coloring.color_of(w)));
  return SimplicialMap(nu, nv, std::move(m));
}

}  // namespace lcdkit
