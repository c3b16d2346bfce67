#include "lcdkit/complex.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "lcdkit/error.hpp"

namespace lcdkit {

struct SimplicialComplex::Data {
  std::vector<VertexId> vertices;
  std::unordered_map<VertexId, Index> index;
  std::set<Simplex> simplices;
  std::set<std::vector<Index>> index_simplices;
  std::vector<std::vector<Index>> adjacency;
  std::vector<std::vector<std::vector<Index>>> incident;
  std::vector<std::size_t> f_vector;
  int dim = -1;
};

namespace {

using Index = SimplicialComplex::Index;

}  // namespace

SimplicialComplex::SimplicialComplex() {
  static const auto empty = std::make_shared<const Data>();
  data_ = empty;
}

SimplicialComplex::SimplicialComplex(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

SimplicialComplex SimplicialComplex::from_simplices(std::span<const Simplex> simplices,
                                                    std::span<const VertexId> extra_vertices) {
  auto data = std::make_shared<Data>();
  for (const auto& s : simplices) {
    if (s.empty()) throw Error("empty simplex in complex");
    if (data->simplices.contains(s)) continue;
    for (auto& f : s.faces()) data->simplices.insert(std::move(f));
  }
  for (const auto& v : extra_vertices) data->simplices.insert(Simplex{v});

  for (const auto& s : data->simplices) {
    if (s.dim() == 0) data->vertices.push_back(s[0]);
    data->dim = std::max(data->dim, s.dim());
  }
  std::sort(data->vertices.begin(), data->vertices.end());
  for (Index i = 0; i < data->vertices.size(); ++i) data->index.emplace(data->vertices[i], i);

  const std::size_t n = data->vertices.size();
  data->adjacency.resize(n);
  data->incident.resize(n);
  data->f_vector.assign(static_cast<std::size_t>(data->dim + 1), 0);
  for (const auto& s : data->simplices) {
    ++data->f_vector[static_cast<std::size_t>(s.dim())];
    std::vector<Index> idx;
    idx.reserve(s.size());
    for (const auto& v : s) idx.push_back(data->index.at(v));
    // vertices are sorted and the index preserves the order, so idx is sorted
    for (Index i : idx) data->incident[i].push_back(idx);
    if (s.dim() == 1) {
      data->adjacency[idx[0]].push_back(idx[1]);
      data->adjacency[idx[1]].push_back(idx[0]);
    }
    data->index_simplices.insert(std::move(idx));
  }
  for (auto& a : data->adjacency) std::sort(a.begin(), a.end());
  return SimplicialComplex(std::move(data));
}

SimplicialComplex SimplicialComplex::from_simplices(std::initializer_list<Simplex> simplices) {
  return from_simplices(std::span<const Simplex>(simplices.begin(), simplices.size()));
}

bool SimplicialComplex::empty() const noexcept { return data_->vertices.empty(); }
int SimplicialComplex::dim() const noexcept { return data_->dim; }
std::size_t SimplicialComplex::num_vertices() const noexcept { return data_->vertices.size(); }
std::size_t SimplicialComplex::num_simplices() const noexcept { return data_->simplices.size(); }
const std::vector<VertexId>& SimplicialComplex::vertices() const noexcept { return data_->vertices; }
const std::set<Simplex>& SimplicialComplex::simplices() const noexcept { return data_->simplices; }
const std::vector<std::size_t>& SimplicialComplex::f_vector() const noexcept {
  return data_->f_vector;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dim(int k) const {
  std::vector<Simplex> out;
  for (const auto& s : data_->simplices) {
    if (s.dim() == k) out.push_back(s);
  }
  return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (const auto& s : data_->simplices) {
    const std::vector<Index> idx = to_indices(s);
    bool maximal = true;
    for (const auto& other : data_->incident[idx.front()]) {
      if (other.size() == s.size() + 1) {
        if (std::includes(other.begin(), other.end(), idx.begin(), idx.end())) {
          maximal = false;
          break;
        }
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

bool SimplicialComplex::contains(const VertexId& v) const { return data_->index.contains(v); }
bool SimplicialComplex::contains(const Simplex& s) const { return data_->simplices.contains(s); }

bool SimplicialComplex::is_pure() const {
  for (const auto& s : maximal_simplices()) {
    if (s.dim() != dim()) return false;
  }
  return true;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::includes(other.simplices().begin(), other.simplices().end(), simplices().begin(),
                       simplices().end());
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t k = 0; k < data_->f_vector.size(); ++k) {
    chi += (k % 2 == 0 ? 1L : -1L) * static_cast<long>(data_->f_vector[k]);
  }
  return chi;
}

SimplicialComplex::Index SimplicialComplex::index_of(const VertexId& v) const {
  auto it = data_->index.find(v);
  if (it == data_->index.end()) throw Error("unknown vertex: " + v.name());
  return it->second;
}

std::optional<SimplicialComplex::Index> SimplicialComplex::find_index(const VertexId& v) const {
  auto it = data_->index.find(v);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::span<const SimplicialComplex::Index> SimplicialComplex::neighbors(Index i) const {
  return data_->adjacency.at(i);
}

std::vector<VertexId> SimplicialComplex::neighbors(const VertexId& v) const {
  std::vector<VertexId> out;
  for (Index j : neighbors(index_of(v))) out.push_back(data_->vertices[j]);
  return out;
}

bool SimplicialComplex::adjacent(Index a, Index b) const {
  const auto& adj = data_->adjacency[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::span<const std::vector<SimplicialComplex::Index>> SimplicialComplex::incident(Index i) const {
  return data_->incident.at(i);
}

bool SimplicialComplex::contains_indices(const std::vector<Index>& sorted) const {
  return data_->index_simplices.contains(sorted);
}

std::vector<SimplicialComplex::Index> SimplicialComplex::to_indices(const Simplex& s) const {
  std::vector<Index> idx;
  idx.reserve(s.size());
  for (const auto& v : s) idx.push_back(index_of(v));
  return idx;
}

Simplex SimplicialComplex::to_simplex(std::span<const Index> indices) const {
  std::vector<VertexId> vs;
  vs.reserve(indices.size());
  for (Index i : indices) vs.push_back(data_->vertices.at(i));
  return Simplex(std::move(vs));
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->simplices == b.data_->simplices;
}

std::size_t Distance::value() const {
  if (!value_) throw Error("distance is infinite");
  return *value_;
}

std::string_view to_string(ManifoldStatus s) {
  switch (s) {
    case ManifoldStatus::closed_manifold: return "closed-manifold";
    case ManifoldStatus::manifold_with_boundary: return "manifold-with-boundary";
    case ManifoldStatus::not_manifold: return "not-manifold";
    case ManifoldStatus::unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(Recognition r) {
  switch (r) {
    case Recognition::yes: return "yes";
    case Recognition::no: return "no";
    case Recognition::unknown: return "unknown";
  }
  return "unknown";
}

// --- metric ------------------------------------------------------------------

std::size_t degree(const SimplicialComplex& k, const VertexId& v) {
  return k.neighbors(k.index_of(v)).size();
}

std::vector<std::optional<std::size_t>> distances_from(const SimplicialComplex& k, Index source) {
  std::vector<std::optional<std::size_t>> dist(k.num_vertices());
  std::deque<Index> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const Index u = queue.front();
    queue.pop_front();
    for (Index w : k.neighbors(u)) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Distance simplicial_distance(const SimplicialComplex& k, const VertexId& u, const VertexId& v) {
  const Index iu = k.index_of(u);
  const Index iv = k.index_of(v);
  const auto dist = distances_from(k, iu);
  if (!dist[iv]) return Distance::infinite();
  return Distance::finite(*dist[iv]);
}

std::size_t eccentricity(const SimplicialComplex& k, const VertexId& v) {
  std::size_t ecc = 0;
  for (const auto& d : distances_from(k, k.index_of(v))) {
    if (d) ecc = std::max(ecc, *d);
  }
  return ecc;
}

std::size_t diameter(const SimplicialComplex& k) {
  std::size_t diam = 0;
  for (const auto& v : k.vertices()) diam = std::max(diam, eccentricity(k, v));
  return diam;
}

// --- local structure ---------------------------------------------------------

SimplicialComplex induced_subcomplex(const SimplicialComplex& k, std::span<const VertexId> vertices) {
  std::vector<char> keep(k.num_vertices(), 0);
  for (const auto& v : vertices) keep[k.index_of(v)] = 1;
  std::vector<Simplex> simplices;
  for (Index i = 0; i < k.num_vertices(); ++i) {
    if (!keep[i]) continue;
    for (const auto& s : k.incident(i)) {
      // visit each simplex once, from its least vertex
      if (s.front() != i) continue;
      if (std::all_of(s.begin(), s.end(), [&](Index j) { return keep[j] != 0; })) {
        simplices.push_back(k.to_simplex(s));
      }
    }
  }
  return SimplicialComplex::from_simplices(simplices);
}

SimplicialComplex neighborhood(const SimplicialComplex& k, const VertexId& v, std::size_t r) {
  const auto dist = distances_from(k, k.index_of(v));
  std::vector<VertexId> ball;
  for (Index i = 0; i < dist.size(); ++i) {
    if (dist[i] && *dist[i] <= r) ball.push_back(k.vertex(i));
  }
  return induced_subcomplex(k, ball);
}

SimplicialComplex closed_star(const SimplicialComplex& k, const VertexId& v) {
  std::vector<Simplex> simplices;
  for (const auto& s : k.incident(k.index_of(v))) simplices.push_back(k.to_simplex(s));
  return SimplicialComplex::from_simplices(simplices);
}

namespace {

// Simplices of k containing s, as index tuples.
std::vector<std::vector<Index>> cofaces(const SimplicialComplex& k, const Simplex& s) {
  if (!k.contains(s)) throw Error("simplex " + to_string(s) + " not in complex");
  const auto idx = k.to_indices(s);
  std::vector<std::vector<Index>> out;
  for (const auto& t : k.incident(idx.front())) {
    if (std::includes(t.begin(), t.end(), idx.begin(), idx.end())) out.push_back(t);
  }
  return out;
}

}  // namespace

SimplicialComplex closed_star(const SimplicialComplex& k, const Simplex& s) {
  std::vector<Simplex> simplices;
  for (const auto& t : cofaces(k, s)) simplices.push_back(k.to_simplex(t));
  return SimplicialComplex::from_simplices(simplices);
}

SimplicialComplex link(const SimplicialComplex& k, const Simplex& s) {
  const auto idx = k.to_indices(s);
  std::vector<Simplex> simplices;
  for (const auto& t : cofaces(k, s)) {
    std::vector<Index> rest;
    std::set_difference(t.begin(), t.end(), idx.begin(), idx.end(), std::back_inserter(rest));
    if (!rest.empty()) simplices.push_back(k.to_simplex(rest));
  }
  return SimplicialComplex::from_simplices(simplices);
}

SimplicialComplex link(const SimplicialComplex& k, const VertexId& v) {
  if (!k.contains(v)) throw Error("unknown vertex: " + v.name());
  return link(k, Simplex{v});
}

SimplicialComplex subcomplex_of(std::span<const Simplex> simplices) {
  return SimplicialComplex::from_simplices(simplices);
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Simplex> all(a.simplices().begin(), a.simplices().end());
  all.insert(all.end(), b.simplices().begin(), b.simplices().end());
  return SimplicialComplex::from_simplices(all);
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Simplex> common;
  std::set_intersection(a.simplices().begin(), a.simplices().end(), b.simplices().begin(),
                        b.simplices().end(), std::back_inserter(common));
  return SimplicialComplex::from_simplices(common);
}

std::vector<std::vector<VertexId>> connected_components(const SimplicialComplex& k) {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(k.num_vertices(), 0);
  for (Index start = 0; start < k.num_vertices(); ++start) {
    if (seen[start]) continue;
    std::vector<Index> component;
    std::deque<Index> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      const Index u = queue.front();
      queue.pop_front();
      component.push_back(u);
      for (Index w : k.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    std::vector<VertexId> names;
    for (Index i : component) names.push_back(k.vertex(i));
    out.push_back(std::move(names));
  }
  return out;
}

bool is_connected(const SimplicialComplex& k) { return connected_components(k).size() <= 1; }

SimplicialComplex relabel(const SimplicialComplex& k, const std::map<VertexId, VertexId>& rename) {
  std::set<VertexId> images;
  for (const auto& v : k.vertices()) {
    auto it = rename.find(v);
    if (it == rename.end()) throw Error("relabel: no image for vertex " + v.name());
    if (!images.insert(it->second).second) throw Error("relabel: map is not injective");
  }
  std::vector<Simplex> simplices;
  simplices.reserve(k.num_simplices());
  for (const auto& s : k.simplices()) {
    std::vector<VertexId> vs;
    for (const auto& v : s) vs.push_back(rename.at(v));
    simplices.emplace_back(std::move(vs));
  }
  return SimplicialComplex::from_simplices(simplices);
}

SimplicialComplex prefixed(const SimplicialComplex& k, std::string_view prefix) {
  std::map<VertexId, VertexId> rename;
  for (const auto& v : k.vertices()) rename.emplace(v, VertexId(std::string(prefix) + v.name()));
  return relabel(k, rename);
}

// --- manifold recognition ------------------------------------------------------

Recognition is_sphere(const SimplicialComplex& k, int dim) {
  if (dim < 0) return k.empty() ? Recognition::yes : Recognition::no;
  if (k.dim() != dim || !k.is_pure() || !is_connected(k)) {
    // a 0-sphere is disconnected by definition
    if (!(dim == 0 && k.dim() == 0)) return Recognition::no;
  }
  switch (dim) {
    case 0:
      return k.num_vertices() == 2 ? Recognition::yes : Recognition::no;
    case 1:
      for (Index i = 0; i < k.num_vertices(); ++i) {
        if (k.neighbors(i).size() != 2) return Recognition::no;
      }
      return Recognition::yes;
    case 2: {
      const auto status = is_combinatorial_manifold(k, 2);
      if (status != ManifoldStatus::closed_manifold) return Recognition::no;
      return k.euler_characteristic() == 2 ? Recognition::yes : Recognition::no;
    }
    default:
      return Recognition::unknown;
  }
}

Recognition is_ball(const SimplicialComplex& k, int dim, std::size_t collapse_budget) {
  if (dim < 0) return Recognition::no;
  if (k.dim() != dim || !k.is_pure() || !is_connected(k)) return Recognition::no;
  switch (dim) {
    case 0:
      return k.num_vertices() == 1 ? Recognition::yes : Recognition::no;
    case 1: {
      std::size_t ends = 0;
      for (Index i = 0; i < k.num_vertices(); ++i) {
        const auto deg = k.neighbors(i).size();
        if (deg > 2) return Recognition::no;
        if (deg == 1) ++ends;
      }
      return ends == 2 ? Recognition::yes : Recognition::no;
    }
    case 2: {
      if (is_combinatorial_manifold(k, 2) != ManifoldStatus::manifold_with_boundary) {
        return Recognition::no;
      }
      if (k.euler_characteristic() != 1) return Recognition::no;
      return is_connected(boundary_complex(k)) ? Recognition::yes : Recognition::no;
    }
    case 3: {
      if (is_combinatorial_manifold(k, 3) != ManifoldStatus::manifold_with_boundary) {
        return Recognition::no;
      }
      if (k.euler_characteristic() != 1) return Recognition::no;
      if (is_sphere(boundary_complex(k), 2) != Recognition::yes) return Recognition::no;
      return collapses_to_point(k, collapse_budget) ? Recognition::yes : Recognition::unknown;
    }
    default:
      return Recognition::unknown;
  }
}

ManifoldStatus is_combinatorial_manifold(const SimplicialComplex& k, int n) {
  if (k.empty() || k.dim() != n || !k.is_pure()) return ManifoldStatus::not_manifold;
  if (n == 0) return ManifoldStatus::closed_manifold;
  if (n >= 4) return ManifoldStatus::unknown;
  bool boundary = false;
  bool unknown = false;
  for (const auto& v : k.vertices()) {
    const auto lk = link(k, v);
    const auto sphere = is_sphere(lk, n - 1);
    if (sphere == Recognition::yes) continue;
    const auto ball = is_ball(lk, n - 1);
    if (ball == Recognition::yes) {
      boundary = true;
      continue;
    }
    if (sphere == Recognition::unknown || ball == Recognition::unknown) {
      unknown = true;
      continue;
    }
    return ManifoldStatus::not_manifold;
  }
  if (unknown) return ManifoldStatus::unknown;
  return boundary ? ManifoldStatus::manifold_with_boundary : ManifoldStatus::closed_manifold;
}

SimplicialComplex boundary_complex(const SimplicialComplex& k) {
  if (is_combinatorial_manifold(k, k.dim()) == ManifoldStatus::not_manifold) {
    throw Error("boundary_complex: input is not a combinatorial manifold");
  }
  const int n = k.dim();
  if (n <= 0) return SimplicialComplex();
  std::map<Simplex, int> count;
  for (const auto& s : k.simplices_of_dim(n)) {
    for (auto& f : s.facets()) ++count[std::move(f)];
  }
  std::vector<Simplex> faces;
  for (const auto& [f, c] : count) {
    if (c == 1) faces.push_back(f);
  }
  return SimplicialComplex::from_simplices(faces);
}

bool collapses_to_point(const SimplicialComplex& k, std::size_t budget) {
  if (k.empty()) return false;
  std::set<std::vector<Index>> alive;
  for (Index i = 0; i < k.num_vertices(); ++i) {
    for (const auto& s : k.incident(i)) {
      if (s.front() == i) alive.insert(s);
    }
  }
  for (std::size_t step = 0; step < budget; ++step) {
    if (alive.size() == 1) return true;
    // immediate cofaces of each alive simplex
    std::map<std::vector<Index>, std::vector<const std::vector<Index>*>> up;
    for (const auto& s : alive) {
      if (s.size() < 2) continue;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<Index> f;
        for (std::size_t j = 0; j < s.size(); ++j) {
          if (j != drop) f.push_back(s[j]);
        }
        up[std::move(f)].push_back(&s);
      }
    }
    bool collapsed = false;
    for (const auto& [face, co] : up) {
      if (co.size() != 1) continue;
      const auto& coface = *co.front();
      if (up.contains(coface)) continue;  // coface is not maximal
      const std::vector<Index> free_face = face;
      const std::vector<Index> maximal = coface;
      alive.erase(maximal);
      alive.erase(free_face);
      collapsed = true;
      break;
    }
    if (!collapsed) return false;
  }
  return alive.size() == 1;
}

bool is_orientable(const SimplicialComplex& k) {
  const int n = k.dim();
  if (n <= 0) return true;
  const auto tops = k.simplices_of_dim(n);
  std::map<Simplex, std::vector<std::pair<std::size_t, int>>> by_facet;
  for (std::size_t t = 0; t < tops.size(); ++t) {
    for (std::size_t drop = 0; drop < tops[t].size(); ++drop) {
      const int sign = (drop % 2 == 0) ? 1 : -1;
      by_facet[tops[t].without(tops[t][drop])].emplace_back(t, sign);
    }
  }
  std::vector<int> orient(tops.size(), 0);
  for (std::size_t start = 0; start < tops.size(); ++start) {
    if (orient[start]) continue;
    orient[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t t = queue.front();
      queue.pop_front();
      for (std::size_t drop = 0; drop < tops[t].size(); ++drop) {
        const int sign_t = (drop % 2 == 0) ? 1 : -1;
        const auto& adj = by_facet[tops[t].without(tops[t][drop])];
        if (adj.size() > 2) return false;
        for (const auto& [u, sign_u] : adj) {
          if (u == t) continue;
          // induced orientations on the shared facet must be opposite
          const int want = -orient[t] * sign_t * sign_u;
          if (!orient[u]) {
            orient[u] = want;
            queue.push_back(u);
          } else if (orient[u] != want) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

// --- simplicial maps -------------------------------------------------------------

bool is_simplicial(const SimplicialComplex& source, const SimplicialComplex& target,
                   const std::map<VertexId, VertexId>& vertex_map) {
  for (const auto& v : source.vertices()) {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end() || !target.contains(it->second)) return false;
  }
  for (const auto& s : source.simplices()) {
    std::vector<VertexId> img;
    for (const auto& v : s) img.push_back(vertex_map.at(v));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (!target.contains(Simplex(std::move(img)))) return false;
  }
  return true;
}

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                             std::map<VertexId, VertexId> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertex_map)) {
  for (const auto& [v, w] : map_) {
    if (!source_.contains(v)) throw Error("simplicial map: " + v.name() + " is not a source vertex");
    if (!target_.contains(w)) throw Error("simplicial map: " + w.name() + " is not a target vertex");
  }
  if (map_.size() != source_.num_vertices()) throw Error("simplicial map is not total");
  for (const auto& s : source_.simplices()) {
    std::vector<VertexId> img;
    for (const auto& v : s) img.push_back(map_.at(v));
    std::sort(img.begin(), img.end());
    const auto before = img.size();
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (img.size() != before) nondegenerate_ = false;
    if (!target_.contains(Simplex(std::move(img)))) {
      throw Error("simplicial map: image of " + to_string(s) + " is not a simplex");
    }
  }
}

const VertexId& SimplicialMap::operator()(const VertexId& v) const {
  auto it = map_.find(v);
  if (it == map_.end()) throw Error("unknown vertex: " + v.name());
  return it->second;
}

Simplex SimplicialMap::image(const Simplex& s) const {
  std::vector<VertexId> img;
  for (const auto& v : s) img.push_back((*this)(v));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return Simplex(std::move(img));
}

SimplicialComplex SimplicialMap::image() const {
  std::vector<Simplex> imgs;
  for (const auto& s : source_.simplices()) imgs.push_back(image(s));
  return SimplicialComplex::from_simplices(imgs);
}

bool SimplicialMap::is_isomorphism() const {
  if (source_.num_vertices() != target_.num_vertices()) return false;
  if (source_.num_simplices() != target_.num_simplices()) return false;
  std::set<VertexId> seen;
  for (const auto& [v, w] : map_) {
    if (!seen.insert(w).second) return false;
  }
  return true;
}

SimplicialMap SimplicialMap::inverse() const {
  if (!is_isomorphism()) throw Error("inverse of a non-isomorphism");
  std::map<VertexId, VertexId> rev;
  for (const auto& [v, w] : map_) rev.emplace(w, v);
  return SimplicialMap(target_, source_, std::move(rev));
}

SimplicialMap SimplicialMap::after(const SimplicialMap& first) const {
  if (!(first.target() == source_)) throw Error("composition: complexes do not match");
  std::map<VertexId, VertexId> composed;
  for (const auto& [v, w] : first.vertex_map()) composed.emplace(v, map_.at(w));
  return SimplicialMap(first.source(), target_, std::move(composed));
}

SimplicialMap identity_map(const SimplicialComplex& k) {
  std::map<VertexId, VertexId> id;
  for (const auto& v : k.vertices()) id.emplace(v, v);
  return SimplicialMap(k, k, std::move(id));
}

}  // namespace lcdkit
