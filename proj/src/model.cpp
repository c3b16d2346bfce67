#include "lcdkit/model.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "lcdkit/catalog.hpp"
#include "lcdkit/error.hpp"
#include "lcdkit/isomorphism.hpp"

namespace lcdkit {

std::string_view to_string(Validity v) {
  switch (v) {
    case Validity::valid:
      return "valid";
    case Validity::invalid:
      return "invalid";
    case Validity::unknown:
      return "unknown";
  }
  return "unknown";
}

bool ModelSet::labeled() const {
  return std::any_of(models.begin(), models.end(),
                     [](const LocalModel& m) { return m.labeling && !m.labeling->empty(); });
}

void ModelSet::check() const {
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto& m = models[i];
    const std::string where = "model " + std::to_string(i);
    if (m.dim != dim) throw Error(where + " has dimension " + std::to_string(m.dim));
    if (!m.complex.contains(m.center)) throw Error(where + ": center is not a vertex");
    if (m.labeling) m.labeling->check_domain(m.complex);
  }
}

Validity validate_local_model(const LocalModel& m, std::size_t collapse_budget) {
  if (m.dim < 0 || !m.complex.contains(m.center)) return Validity::invalid;
  switch (is_ball(m.complex, m.dim, collapse_budget)) {
    case Recognition::yes:
      return Validity::valid;
    case Recognition::no:
      return Validity::invalid;
    case Recognition::unknown:
      return Validity::unknown;
  }
  return Validity::unknown;
}

namespace {

using VMap = std::map<VertexId, VertexId>;

Simplex image_of(const Simplex& s, const VMap& f) {
  std::vector<VertexId> img;
  for (const auto& v : s) img.push_back(f.at(v));
  return Simplex(img);
}

bool labels_compatible(const LocalModel& model, const VMap& f, const Labeling& labels) {
  if (!model.labeling) return true;
  for (const auto& [w, lab] : model.labeling->vertex_labels) {
    const Label* got = labels.vertex_label(f.at(w));
    if (!got || *got != lab) return false;
  }
  for (const auto& [s, lab] : model.labeling->simplex_labels) {
    const Label* got = labels.simplex_label(image_of(s, f));
    if (!got || *got != lab) return false;
  }
  return true;
}

/// Vertices of k in breadth-first order, component by component.
std::vector<VertexId> bfs_order(const SimplicialComplex& k) {
  std::vector<VertexId> out;
  std::vector<char> seen(k.num_vertices(), 0);
  for (SimplicialComplex::Index s = 0; s < k.num_vertices(); ++s) {
    if (seen[s]) continue;
    std::vector<SimplicialComplex::Index> queue{s};
    seen[s] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      out.push_back(k.vertex(queue[q]));
      for (auto w : k.neighbors(queue[q])) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return out;
}

/// Backtracking search for a labeling of m under which every vertex has a
/// label-preserving model neighborhood.
class LabeledSearch {
 public:
  LabeledSearch(const SimplicialComplex& m, const ModelSet& ms, Labeling initial)
      : m_(m), ms_(ms), labels_(std::move(initial)), order_(bfs_order(m)) {}

  std::optional<ModelingCertificate> run() {
    if (!extend(0)) return std::nullopt;
    ModelingCertificate cert;
    for (const auto& [x, pick] : chosen_) {
      const auto& model = ms_.models[pick.first];
      cert.matches.emplace(x, ModelMatch{pick.first, SimplicialMap(model.complex, m_, pick.second)});
    }
    cert.labeling = labels_;
    return cert;
  }

 private:
  bool extend(std::size_t k) {
    if (k == order_.size()) return true;
    const VertexId& x = order_[k];
    for (std::size_t i = 0; i < ms_.models.size(); ++i) {
      const auto& model = ms_.models[i];
      if (model.dim != m_.dim()) continue;
      bool done = false;
      for_each_star_embedding(model.complex, model.center, m_, x, [&](const VMap& f) {
        std::vector<VertexId> new_vertices;
        std::vector<Simplex> new_simplices;
        if (assign(model, f, new_vertices, new_simplices)) {
          chosen_[x] = {i, f};
          if (extend(k + 1)) {
            done = true;
            return false;
          }
          chosen_.erase(x);
        }
        for (const auto& v : new_vertices) labels_.vertex_labels.erase(v);
        for (const auto& s : new_simplices) labels_.simplex_labels.erase(s);
        return true;
      });
      if (done) return true;
    }
    return false;
  }

  /// Extends labels_ by the model's labels through f; false on conflict.
  /// Newly assigned elements are reported so the caller can undo them.
  bool assign(const LocalModel& model, const VMap& f, std::vector<VertexId>& nv,
              std::vector<Simplex>& ns) {
    if (!model.labeling) return true;
    for (const auto& [w, lab] : model.labeling->vertex_labels) {
      const auto& v = f.at(w);
      const auto [it, inserted] = labels_.vertex_labels.emplace(v, lab);
      if (inserted) {
        nv.push_back(v);
      } else if (it->second != lab) {
        return false;
      }
    }
    for (const auto& [s, lab] : model.labeling->simplex_labels) {
      const Simplex t = image_of(s, f);
      const auto [it, inserted] = labels_.simplex_labels.emplace(t, lab);
      if (inserted) {
        ns.push_back(t);
      } else if (it->second != lab) {
        return false;
      }
    }
    return true;
  }

  const SimplicialComplex& m_;
  const ModelSet& ms_;
  Labeling labels_;
  std::vector<VertexId> order_;
  std::map<VertexId, std::pair<std::size_t, VMap>> chosen_;
};

}  // namespace

std::optional<SimplicialMap> find_model_neighborhood(const SimplicialComplex& m,
                                                     const Labeling* labels, const VertexId& x,
                                                     const LocalModel& model) {
  if (model.dim != m.dim()) return std::nullopt;
  std::optional<VMap> found;
  for_each_star_embedding(model.complex, model.center, m, x, [&](const VMap& f) {
    if (labels && !labels_compatible(model, f, *labels)) return true;
    found = f;
    return false;
  });
  if (!found) return std::nullopt;
  return SimplicialMap(model.complex, m, *found);
}

std::optional<ModelingCertificate> is_modeled_on(const SimplicialComplex& m, const ModelSet& ms,
                                                 const Labeling* labels) {
  ms.check();
  if (labels) labels->check_domain(m);
  if (ms.labeled()) {
    return LabeledSearch(m, ms, labels ? *labels : Labeling{}).run();
  }
  ModelingCertificate cert;
  for (const auto& x : m.vertices()) {
    bool ok = false;
    for (std::size_t i = 0; i < ms.models.size() && !ok; ++i) {
      if (auto f = find_model_neighborhood(m, nullptr, x, ms.models[i])) {
        cert.matches.emplace(x, ModelMatch{i, std::move(*f)});
        ok = true;
      }
    }
    if (!ok) return std::nullopt;
  }
  return cert;
}

bool check_certificate(const SimplicialComplex& m, const ModelSet& ms,
                       const ModelingCertificate& cert) {
  if (cert.matches.size() != m.num_vertices()) return false;
  for (const auto& x : m.vertices()) {
    const auto it = cert.matches.find(x);
    if (it == cert.matches.end() || it->second.model_index >= ms.models.size()) return false;
    const auto& model = ms.models[it->second.model_index];
    const auto& f = it->second.embedding;
    if (!(f.source() == model.complex) || !(f.target() == m)) return false;
    if (f(model.center) != x) return false;
    std::set<VertexId> img;
    for (const auto& [a, b] : f.vertex_map()) img.insert(b);
    if (img.size() != model.complex.num_vertices()) return false;
    if (!closed_star(m, x).is_subcomplex_of(f.image())) return false;
    if (ms.labeled()) {
      if (!cert.labeling || !labels_compatible(model, f.vertex_map(), *cert.labeling)) return false;
    }
  }
  return true;
}

namespace {

/// Generates connected closed surfaces by repeatedly closing the least open
/// edge with a triangle. Vertex 0 is taken to have minimum degree and a new
/// vertex is always the least unused one.
class SurfaceGenerator {
 public:
  explicit SurfaceGenerator(const EnumerationOptions& opts) : max_(opts.max_vertices) {
    allowed_.assign(max_ + 1, opts.allowed_degrees.empty() ? 1 : 0);
    for (auto d : opts.allowed_degrees) {
      if (d <= max_) allowed_[d] = 1;
    }
    max_degree_ = 0;
    for (std::size_t d = 0; d <= max_; ++d) {
      if (allowed_[d]) max_degree_ = d;
    }
    edges_.assign(max_, std::vector<int>(max_, 0));
    closed_.assign(max_, 0);
  }

  std::vector<SimplicialComplex> run() {
    if (max_ < 4) return {};
    add({0, 1, 2});
    used_ = 3;
    search();
    std::stable_sort(found_.begin(), found_.end(), [](const auto& a, const auto& b) {
      return a.num_vertices() < b.num_vertices();
    });
    return found_;
  }

 private:
  using Tri = std::array<int, 3>;

  std::size_t deg(int v) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < used_; ++w) d += edges_[v][w] > 0;
    return d;
  }

  void add(Tri t) {
    std::sort(t.begin(), t.end());
    tris_.push_back(t);
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        ++edges_[t[i]][t[j]];
        ++edges_[t[j]][t[i]];
      }
    }
  }

  void remove_last() {
    const Tri t = tris_.back();
    tris_.pop_back();
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        --edges_[t[i]][t[j]];
        --edges_[t[j]][t[i]];
      }
    }
  }

  bool has_triangle(Tri t) const {
    std::sort(t.begin(), t.end());
    return std::find(tris_.begin(), tris_.end(), t) != tris_.end();
  }

  /// True when p and q are joined by a path in the current link of v.
  bool link_connected(int v, int p, int q) const {
    std::vector<int> stack{p};
    std::vector<char> seen(max_, 0);
    seen[p] = 1;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      if (a == q) return true;
      for (const auto& t : tris_) {
        if (t[0] != v && t[1] != v && t[2] != v) continue;
        int o[2];
        int k = 0;
        for (int x : t) {
          if (x != v) o[k++] = x;
        }
        for (int s = 0; s < 2; ++s) {
          if (o[s] == a && !seen[o[1 - s]]) {
            seen[o[1 - s]] = 1;
            stack.push_back(o[1 - s]);
          }
        }
      }
    }
    return false;
  }

  /// Number of vertices in the link of v.
  std::size_t link_size(int v) const { return deg(v); }

  void search() {
    int a = -1;
    int b = -1;
    for (std::size_t i = 0; i < used_ && a < 0; ++i) {
      for (std::size_t j = i + 1; j < used_; ++j) {
        if (edges_[i][j] == 1) {
          a = static_cast<int>(i);
          b = static_cast<int>(j);
          break;
        }
      }
    }
    if (a < 0) {
      record();
      return;
    }
    const std::size_t limit = std::min(used_ + 1, max_);
    for (std::size_t wi = 0; wi < limit; ++wi) {
      const int w = static_cast<int>(wi);
      if (w == a || w == b || closed_[w]) continue;
      if (edges_[a][w] >= 2 || edges_[b][w] >= 2) continue;
      if (has_triangle({a, b, w})) continue;
      const bool fresh = wi == used_;
      try_triangle(a, b, w, fresh);
    }
  }

  void try_triangle(int a, int b, int w, bool fresh) {
    const Tri t{a, b, w};
    // links that close into a circle with this triangle
    std::vector<int> closing;
    for (int i = 0; i < 3; ++i) {
      const int v = t[i];
      const int p = t[(i + 1) % 3];
      const int q = t[(i + 2) % 3];
      if (edges_[v][p] == 0 || edges_[v][q] == 0) continue;
      if (!link_connected(v, p, q)) continue;
      // closing a circle is only allowed when it is the whole link
      std::size_t reach = 0;
      for (std::size_t u = 0; u < used_; ++u) {
        if (edges_[v][u] > 0 && link_connected(v, p, static_cast<int>(u))) ++reach;
      }
      if (reach != link_size(v)) return;
      closing.push_back(v);
    }
    if (fresh) ++used_;
    add(t);
    bool ok = true;
    for (int v : t) {
      if (deg(v) > max_degree_) ok = false;
    }
    for (int v : closing) {
      const auto d = deg(v);
      if (!allowed_[d]) ok = false;
      if (v != 0 && closed_[0] && d < deg(0)) ok = false;
      if (v == 0) {
        for (std::size_t u = 1; u < used_; ++u) {
          if (closed_[u] && deg(static_cast<int>(u)) < d) ok = false;
        }
      }
    }
    if (ok) {
      for (int v : closing) closed_[v] = 1;
      search();
      for (int v : closing) closed_[v] = 0;
    }
    remove_last();
    if (fresh) --used_;
  }

  void record() {
    std::vector<Simplex> ss;
    for (const auto& t : tris_) {
      ss.push_back(Simplex{VertexId::from_int(t[0]), VertexId::from_int(t[1]), VertexId::from_int(t[2])});
    }
    auto k = SimplicialComplex::from_simplices(ss);
    if (is_combinatorial_manifold(k, 2) != ManifoldStatus::closed_manifold) return;
    std::vector<std::size_t> degrees;
    for (const auto& v : k.vertices()) degrees.push_back(degree(k, v));
    std::sort(degrees.begin(), degrees.end());
    auto& bucket = buckets_[{k.num_vertices(), degrees}];
    for (std::size_t idx : bucket) {
      if (find_isomorphism(k, found_[idx]).has_value()) return;
    }
    bucket.push_back(found_.size());
    found_.push_back(std::move(k));
  }

  std::size_t max_;
  std::size_t max_degree_;
  std::vector<char> allowed_;
  std::size_t used_ = 0;
  std::vector<Tri> tris_;
  std::vector<std::vector<int>> edges_;
  std::vector<char> closed_;
  std::vector<SimplicialComplex> found_;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::vector<std::size_t>> buckets_;
};

}  // namespace

std::vector<SimplicialComplex> enumerate_closed_manifolds(int n, const EnumerationOptions& opts) {
  if (n == 1) {
    std::vector<SimplicialComplex> out;
    const bool two_ok = opts.allowed_degrees.empty() ||
                        std::find(opts.allowed_degrees.begin(), opts.allowed_degrees.end(), 2) !=
                            opts.allowed_degrees.end();
    if (!two_ok) return out;
    for (std::size_t k = 3; k <= opts.max_vertices; ++k) out.push_back(catalog::cycle(k));
    return out;
  }
  if (n == 2) return SurfaceGenerator(opts).run();
  throw Error("enumeration is supported for dimensions 1 and 2 only");
}

std::vector<SimplicialComplex> enumerate_modeled(const ModelSet& ms, std::size_t max_vertices) {
  ms.check();
  if (ms.models.empty()) return {};
  EnumerationOptions opts;
  opts.max_vertices = max_vertices;
  std::set<std::size_t> degrees;
  for (const auto& m : ms.models) degrees.insert(degree(m.complex, m.center));
  opts.allowed_degrees.assign(degrees.begin(), degrees.end());
  std::vector<SimplicialComplex> out;
  for (auto& k : enumerate_closed_manifolds(ms.dim, opts)) {
    if (is_modeled_on(k, ms)) out.push_back(std::move(k));
  }
  return out;
}

std::string manifold_name(const SimplicialComplex& k) {
  if (k.dim() == 1 && is_connected(k) &&
      is_combinatorial_manifold(k, 1) == ManifoldStatus::closed_manifold) {
    return "C" + std::to_string(k.num_vertices());
  }
  if (k.dim() != 2 || !is_connected(k) ||
      is_combinatorial_manifold(k, 2) != ManifoldStatus::closed_manifold) {
    throw Error("not a connected closed 1- or 2-manifold");
  }
  const long chi = k.euler_characteristic();
  if (is_orientable(k)) {
    if (chi == 2) return "S2";
    if (chi == 0) return "T2";
    return "S_" + std::to_string((2 - chi) / 2);
  }
  if (chi == 1) return "RP2";
  if (chi == 0) return "K2";
  return "N_" + std::to_string(2 - chi);
}

}  // namespace lcdkit
