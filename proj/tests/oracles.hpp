#pragma once

// Brute-force reference implementations. They follow the definitions
// literally and share no search code with the library.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "lcdkit/branched.hpp"
#include "lcdkit/complex.hpp"
#include "lcdkit/labeling.hpp"
#include "lcdkit/model.hpp"

namespace lcdkit::oracle {

/// Calls f for every vertex bijection source -> target that is a simplicial
/// isomorphism (checked simplex by simplex).
inline void for_each_isomorphism_brute(const SimplicialComplex& a, const SimplicialComplex& b,
                                       const std::function<void(const std::map<VertexId, VertexId>&)>& f) {
  if (a.num_vertices() != b.num_vertices() || a.num_simplices() != b.num_simplices()) return;
  std::vector<std::size_t> perm(b.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::map<VertexId, VertexId> m;
    for (std::size_t i = 0; i < perm.size(); ++i) m.emplace(a.vertices()[i], b.vertices()[perm[i]]);
    bool ok = true;
    for (const auto& s : a.simplices()) {
      std::vector<VertexId> img;
      for (const auto& v : s) img.push_back(m.at(v));
      if (!b.contains(Simplex(img))) {
        ok = false;
        break;
      }
    }
    if (ok) f(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

inline std::size_t count_isomorphisms_brute(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::size_t n = 0;
  for_each_isomorphism_brute(a, b, [&](const auto&) { ++n; });
  return n;
}

/// d-coloring straight from the definition: injective on the vertices of
/// every N(K, v, d).
inline bool is_d_coloring_by_definition(const SimplicialComplex& k, const Labeling& colors,
                                        std::size_t d) {
  for (const auto& v : k.vertices()) {
    const auto nbhd = neighborhood(k, v, d);
    std::set<Label> seen;
    for (const auto& w : nbhd.vertices()) {
      if (!seen.insert(colors.vertex_labels.at(w)).second) return false;
    }
  }
  return true;
}

/// Every injective vertex map model -> m sending the center to x, checked to
/// be simplicial, label-compatible and to cover the closed star of x.
inline bool has_model_neighborhood_brute(const SimplicialComplex& m, const VertexId& x,
                                         const LocalModel& model, const Labeling* labels) {
  const auto& mv = model.complex.vertices();
  const auto& hv = m.vertices();
  if (mv.size() > hv.size()) return false;
  std::set<Simplex> star;
  for (const auto& s : m.simplices()) {
    if (s.contains(x)) star.insert(s);
  }
  std::map<VertexId, VertexId> f;
  std::set<VertexId> used;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == mv.size()) {
      if (f.at(model.center) != x) return false;
      std::set<Simplex> image;
      for (const auto& s : model.complex.simplices()) {
        std::vector<VertexId> img;
        for (const auto& v : s) img.push_back(f.at(v));
        const Simplex t(img);
        if (!m.contains(t)) return false;
        image.insert(t);
      }
      for (const auto& s : star) {
        if (!image.contains(s)) return false;
      }
      if (labels && model.labeling) {
        for (const auto& [w, lab] : model.labeling->vertex_labels) {
          const Label* got = labels->vertex_label(f.at(w));
          if (!got || *got != lab) return false;
        }
        for (const auto& [s, lab] : model.labeling->simplex_labels) {
          std::vector<VertexId> img;
          for (const auto& v : s) img.push_back(f.at(v));
          const Label* got = labels->simplex_label(Simplex(img));
          if (!got || *got != lab) return false;
        }
      }
      return true;
    }
    for (const auto& h : hv) {
      if (used.contains(h)) continue;
      if (mv[i] == model.center && h != x) continue;
      if (labels && model.labeling) {
        const auto it = model.labeling->vertex_labels.find(mv[i]);
        if (it != model.labeling->vertex_labels.end()) {
          const Label* got = labels->vertex_label(h);
          if (!got || *got != it->second) continue;
        }
      }
      f[mv[i]] = h;
      used.insert(h);
      const bool ok = rec(i + 1);
      used.erase(h);
      f.erase(mv[i]);
      if (ok) return true;
    }
    return false;
  };
  return rec(0);
}

/// Modeled-on by brute force. For labeled model sets every assignment of
/// the model alphabet to the vertices of m is tried; only vertex labels are
/// supported.
inline bool is_modeled_on_brute(const SimplicialComplex& m, const ModelSet& ms) {
  auto all_covered = [&](const Labeling* labels) {
    for (const auto& x : m.vertices()) {
      bool ok = false;
      for (const auto& model : ms.models) {
        if (model.dim == m.dim() && has_model_neighborhood_brute(m, x, model, labels)) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  };
  if (!ms.labeled()) return all_covered(nullptr);
  std::set<Label> alphabet;
  for (const auto& model : ms.models) {
    if (model.labeling) {
      for (const auto& [v, l] : model.labeling->vertex_labels) alphabet.insert(l);
    }
  }
  const std::vector<Label> letters(alphabet.begin(), alphabet.end());
  const auto& vs = m.vertices();
  std::vector<std::size_t> digit(vs.size(), 0);
  while (true) {
    Labeling lab;
    for (std::size_t i = 0; i < vs.size(); ++i) lab.vertex_labels.emplace(vs[i], letters[digit[i]]);
    if (all_covered(&lab)) return true;
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == letters.size()) digit[i++] = 0;
    if (i == digit.size()) return false;
  }
}

/// The immersion definition checked literally on a total vertex map:
/// simplicial and nondegenerate; every closed star maps into some domain on
/// which the projection is injective; for every projection j, pi_j o f is
/// injective on the part of each star that lands in W_j; and the preimage of
/// the branched boundary is the boundary of m.
inline bool is_immersion_by_definition(const SimplicialComplex& m, const BranchedManifold& w,
                                       const std::map<VertexId, VertexId>& f) {
  auto img = [&](const Simplex& s) {
    std::set<VertexId> out;
    for (const auto& v : s) out.insert(f.at(v));
    return out;
  };
  for (const auto& s : m.simplices()) {
    const auto i = img(s);
    if (i.size() != s.size()) return false;
    if (!w.complex.contains(Simplex(std::vector<VertexId>(i.begin(), i.end())))) return false;
  }
  for (const auto& x : m.vertices()) {
    std::vector<Simplex> star;
    std::set<VertexId> star_vertices;
    for (const auto& s : m.simplices()) {
      if (!s.contains(x)) continue;
      star.push_back(s);
      for (const auto& v : s) star_vertices.insert(v);
    }
    bool witnessed = false;
    for (const auto& p : w.projections) {
      bool inside = true;
      for (const auto& s : star) {
        const auto i = img(s);
        if (!p.domain.contains(Simplex(std::vector<VertexId>(i.begin(), i.end())))) inside = false;
      }
      if (!inside) continue;
      std::set<VertexId> seen;
      bool inj = true;
      for (const auto& v : star_vertices) inj = inj && seen.insert(p.vertex_map.at(f.at(v))).second;
      if (inj) witnessed = true;
    }
    if (!witnessed) return false;
    for (const auto& p : w.projections) {
      if (!p.domain.contains(f.at(x))) continue;
      std::set<VertexId> seen;
      for (const auto& v : star_vertices) {
        if (!p.domain.contains(f.at(v))) continue;
        if (!seen.insert(p.vertex_map.at(f.at(v))).second) return false;
      }
    }
  }
  if (is_combinatorial_manifold(m, m.dim()) == ManifoldStatus::not_manifold) return false;
  const auto bw = branched_boundary(w);
  const auto bm = boundary_complex(m);
  for (const auto& s : m.simplices()) {
    const auto i = img(s);
    const bool to_boundary = bw.contains(Simplex(std::vector<VertexId>(i.begin(), i.end())));
    if (to_boundary != bm.contains(s)) return false;
  }
  return true;
}

/// Calls visit for every vertex map m -> w.complex satisfying the immersion
/// definition. Maps are enumerated vertex by vertex in m's order, dropping a
/// partial map as soon as an edge between assigned vertices is not sent to
/// an edge.
inline void for_each_immersion_brute(const SimplicialComplex& m, const BranchedManifold& w,
                                     const std::function<void(const std::map<VertexId, VertexId>&)>& visit) {
  const auto& mv = m.vertices();
  const auto& wv = w.complex.vertices();
  std::map<VertexId, VertexId> f;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == mv.size()) {
      if (is_immersion_by_definition(m, w, f)) visit(f);
      return;
    }
    for (const auto& t : wv) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (!m.contains(Simplex{mv[j], mv[i]})) continue;
        const auto& u = f.at(mv[j]);
        ok = u != t && w.complex.contains(Simplex{u, t});
      }
      if (!ok) continue;
      f[mv[i]] = t;
      rec(i + 1);
      f.erase(mv[i]);
    }
  };
  rec(0);
}

inline std::size_t count_immersions_brute(const SimplicialComplex& m, const BranchedManifold& w) {
  std::size_t n = 0;
  for_each_immersion_brute(m, w, [&](const auto&) { ++n; });
  return n;
}

}  // namespace lcdkit::oracle
