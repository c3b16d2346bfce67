#include "lcdkit/branched.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "lcdkit/error.hpp"

namespace lcdkit {

const VertexId& LocalProjection::operator()(const VertexId& v) const {
  const auto it = vertex_map.find(v);
  if (it == vertex_map.end()) throw Error("vertex " + v.name() + " is not in the projection domain");
  return it->second;
}

bool BranchedReport::has(std::string_view kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

namespace {

std::map<VertexId, VertexId> restrict_map(const std::map<VertexId, VertexId>& m,
                                          const SimplicialComplex& k) {
  std::map<VertexId, VertexId> out;
  for (const auto& v : k.vertices()) {
    const auto it = m.find(v);
    if (it != m.end()) out.emplace(v, it->second);
  }
  return out;
}

}  // namespace

BranchedReport validate_branched(const BranchedManifold& w, std::size_t collapse_budget) {
  BranchedReport report;
  auto add = [&](const char* kind, std::string detail, std::optional<std::size_t> i = std::nullopt) {
    report.violations.push_back(Violation{kind, std::move(detail), i});
  };
  if (w.complex.dim() != w.dim) {
    add(violation::dimension, "complex has dimension " + std::to_string(w.complex.dim()) +
                                  ", expected " + std::to_string(w.dim));
  }
  std::vector<char> usable(w.projections.size(), 0);
  for (std::size_t i = 0; i < w.projections.size(); ++i) {
    const auto& p = w.projections[i];
    const std::string where = "projection " + std::to_string(i);
    if (!p.domain.is_subcomplex_of(w.complex)) {
      add(violation::domain_not_subcomplex, where + ": domain is not a subcomplex", i);
      continue;
    }
    const auto map = restrict_map(p.vertex_map, p.domain);
    if (!is_simplicial(p.domain, p.chart, map)) {
      add(violation::map_not_simplicial, where + ": vertex map is not a simplicial map into the chart", i);
      continue;
    }
    const SimplicialMap pi(p.domain, p.chart, map);
    usable[i] = 1;
    if (!pi.nondegenerate()) add(violation::map_degenerate, where + ": map collapses a simplex", i);

    switch (is_ball(p.chart, w.dim, collapse_budget)) {
      case Recognition::no:
        add(violation::chart_not_ball, where + ": chart is not a combinatorial " + std::to_string(w.dim) + "-ball", i);
        break;
      case Recognition::unknown:
        report.warnings.push_back(where + ": chart ballness undecided");
        break;
      case Recognition::yes:
        break;
    }

    SimplicialComplex covered;
    for (std::size_t s = 0; s < p.sheets.size(); ++s) {
      const auto& sheet = p.sheets[s];
      const std::string sw = where + ", sheet " + std::to_string(s);
      if (!sheet.is_subcomplex_of(p.domain)) {
        add(violation::sheet_not_in_domain, sw + " is not contained in the domain", i);
        continue;
      }
      covered = complex_union(covered, sheet);
      const SimplicialMap part(sheet, p.chart, restrict_map(map, sheet));
      if (!part.is_isomorphism()) {
        add(violation::sheet_not_isomorphic, sw + " does not map isomorphically onto the chart", i);
      }
    }
    if (!(covered == p.domain)) {
      add(violation::sheet_union_mismatch, where + ": the union of the sheets is not the domain", i);
    }
  }

  for (const auto& x : w.complex.vertices()) {
    const auto star = closed_star(w.complex, x);
    const bool ok = std::any_of(w.projections.begin(), w.projections.end(), [&](const LocalProjection& p) {
      return star.is_subcomplex_of(p.domain);
    });
    if (!ok) add(violation::not_covered, "no projection domain contains the star of " + x.name());
  }

  for (std::size_t i = 0; i < w.projections.size(); ++i) {
    if (!usable[i]) continue;
    for (std::size_t j = i + 1; j < w.projections.size(); ++j) {
      if (!usable[j]) continue;
      const auto& a = w.projections[i];
      const auto& b = w.projections[j];
      std::vector<VertexId> common;
      for (const auto& v : a.domain.vertices()) {
        if (b.domain.contains(v)) common.push_back(v);
      }
      bool bad = false;
      for (std::size_t s = 0; s < common.size() && !bad; ++s) {
        for (std::size_t t = s + 1; t < common.size() && !bad; ++t) {
          const bool ea = a(common[s]) == a(common[t]);
          const bool eb = b(common[s]) == b(common[t]);
          if (ea != eb) {
            add(violation::compatibility,
                "projections " + std::to_string(i) + " and " + std::to_string(j) + " disagree on " +
                    common[s].name() + ", " + common[t].name(),
                i);
            bad = true;
          }
        }
      }
    }
  }
  return report;
}

SimplicialComplex branch_set(const BranchedManifold& w) {
  if (w.dim >= 4) throw Error("the branch set is only computed for n <= 3");
  std::vector<Simplex> bad;
  for (const auto& s : w.complex.simplices()) {
    const int ld = w.dim - s.dim() - 1;
    const auto lk = link(w.complex, s);
    bool good = false;
    if (ld < 0) {
      good = ld == -1 && lk.empty();
    } else {
      good = is_sphere(lk, ld) == Recognition::yes || is_ball(lk, ld) == Recognition::yes;
    }
    if (!good) bad.push_back(s);
  }
  return subcomplex_of(bad);
}

SimplicialComplex branched_boundary(const BranchedManifold& w) {
  std::vector<std::optional<SimplicialComplex>> chart_boundary;
  for (const auto& p : w.projections) {
    try {
      chart_boundary.push_back(boundary_complex(p.chart));
    } catch (const Error&) {
      chart_boundary.emplace_back();
    }
  }
  std::vector<Simplex> out;
  for (const auto& s : w.complex.simplices()) {
    const auto star = closed_star(w.complex, s);
    for (std::size_t i = 0; i < w.projections.size(); ++i) {
      const auto& p = w.projections[i];
      if (!chart_boundary[i] || !star.is_subcomplex_of(p.domain)) continue;
      std::vector<VertexId> img;
      for (const auto& v : s) {
        const auto it = p.vertex_map.find(v);
        if (it == p.vertex_map.end()) break;
        if (std::find(img.begin(), img.end(), it->second) == img.end()) img.push_back(it->second);
      }
      if (img.empty()) continue;
      if (chart_boundary[i]->contains(Simplex(img))) {
        out.push_back(s);
        break;
      }
    }
  }
  return subcomplex_of(out);
}

bool is_nice(const BranchedManifold& w) {
  const auto bs = branch_set(w);
  if (!bs.is_subcomplex_of(w.complex)) throw InternalError("branch set is not a subcomplex");
  for (const auto& s : w.complex.simplices()) {
    const auto star = closed_star(w.complex, s);
    const bool ok = std::any_of(w.projections.begin(), w.projections.end(), [&](const LocalProjection& p) {
      return star.is_subcomplex_of(p.domain);
    });
    if (!ok) return false;
  }
  return true;
}

BranchedManifold closed_manifold_as_branched(const SimplicialComplex& m) {
  BranchedManifold w{m, {}, m.dim()};
  for (const auto& x : m.vertices()) {
    auto star = closed_star(m, x);
    std::map<VertexId, VertexId> id;
    for (const auto& v : star.vertices()) id.emplace(v, v);
    w.projections.push_back(LocalProjection{star, star, std::move(id), {star}});
  }
  return w;
}

namespace {

/// Projection-side data shared by the immersion checks.
struct Target {
  const BranchedManifold& w;
  std::set<Simplex> boundary;

  explicit Target(const BranchedManifold& bm) : w(bm) {
    const auto b = branched_boundary(bm);
    boundary.insert(b.simplices().begin(), b.simplices().end());
  }

  /// Images of the vertices `verts` under pi_i o f are pairwise distinct.
  static bool injective(const LocalProjection& p, const std::vector<VertexId>& images) {
    std::set<VertexId> seen;
    for (const auto& v : images) {
      if (!seen.insert(p(v)).second) return false;
    }
    return true;
  }

  /// Least projection whose domain contains the image simplices and is
  /// injective on the image vertices.
  std::optional<std::size_t> witness(const std::vector<Simplex>& image_simplices,
                                     const std::vector<VertexId>& image_vertices) const {
    for (std::size_t i = 0; i < w.projections.size(); ++i) {
      const auto& p = w.projections[i];
      const bool inside = std::all_of(image_simplices.begin(), image_simplices.end(),
                                      [&](const Simplex& s) { return p.domain.contains(s); });
      if (inside && injective(p, image_vertices)) return i;
    }
    return std::nullopt;
  }
};

std::string check_with(const SimplicialComplex& m, const Target& t, const SimplicialMap& f,
                       std::map<VertexId, std::size_t>& witnesses) {
  if (!f.nondegenerate()) return "degenerate: the map collapses a simplex";
  for (const auto& x : m.vertices()) {
    const auto star = closed_star(m, x);
    std::vector<Simplex> imgs;
    for (const auto& s : star.simplices()) imgs.push_back(f.image(s));
    std::vector<VertexId> verts;
    for (const auto& v : star.vertices()) verts.push_back(f(v));
    const auto wi = t.witness(imgs, verts);
    if (!wi) return "no projection is injective on the image of the star of " + x.name();
    witnesses[x] = *wi;
    for (std::size_t j = 0; j < t.w.projections.size(); ++j) {
      const auto& p = t.w.projections[j];
      if (!p.domain.contains(f(x))) continue;
      std::vector<VertexId> inside;
      for (const auto& v : verts) {
        if (p.domain.contains(v)) inside.push_back(v);
      }
      if (!Target::injective(p, inside)) {
        return "projection " + std::to_string(j) + " is not injective near " + x.name();
      }
    }
  }
  const auto status = is_combinatorial_manifold(m, m.dim());
  if (status == ManifoldStatus::not_manifold) return "source is not a combinatorial manifold";
  const auto bm = boundary_complex(m);
  for (const auto& s : m.simplices()) {
    const bool in_pre = t.boundary.contains(f.image(s));
    if (in_pre != bm.contains(s)) {
      return "not proper at simplex " + to_string(s);
    }
  }
  return {};
}

}  // namespace

ImmersionCheck check_immersion(const SimplicialComplex& m, const BranchedManifold& w,
                               const SimplicialMap& f) {
  if (!(f.source() == m) || !(f.target() == w.complex)) {
    return {std::nullopt, "map does not run from the source complex to the branched manifold"};
  }
  const Target t(w);
  std::map<VertexId, std::size_t> witnesses;
  auto reason = check_with(m, t, f, witnesses);
  if (!reason.empty()) return {std::nullopt, std::move(reason)};
  return {Immersion{f, std::move(witnesses)}, {}};
}

std::optional<Immersion> is_immersion(const SimplicialComplex& m, const BranchedManifold& w,
                                      const SimplicialMap& f) {
  return check_immersion(m, w, f).immersion;
}

namespace {

using Index = SimplicialComplex::Index;
constexpr Index kNone = static_cast<Index>(-1);

class ImmersionSearch {
 public:
  ImmersionSearch(const SimplicialComplex& m, const BranchedManifold& w)
      : m_(m), w_(w), target_(w), img_(m.num_vertices(), kNone) {
    std::vector<char> seen(m.num_vertices(), 0);
    for (Index s = 0; s < m.num_vertices(); ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      const std::size_t first = order_.size();
      order_.push_back(s);
      anchor_.push_back(kNone);
      for (std::size_t q = first; q < order_.size(); ++q) {
        for (Index v : m.neighbors(order_[q])) {
          if (!seen[v]) {
            seen[v] = 1;
            order_.push_back(v);
            anchor_.push_back(order_[q]);
          }
        }
      }
    }
  }

  std::size_t run(const std::function<bool(const Immersion&)>& visit) {
    visit_ = &visit;
    extend(0);
    return found_;
  }

 private:
  bool consistent(Index u) const {
    const auto& tc = w_.complex;
    std::vector<Index> image;
    for (const auto& s : m_.incident(u)) {
      image.clear();
      bool complete = true;
      for (Index x : s) {
        if (img_[x] == kNone) {
          complete = false;
          break;
        }
        image.push_back(img_[x]);
      }
      if (!complete) continue;
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
      if (!tc.contains_indices(image)) return false;
    }
    std::vector<Index> around{u};
    for (Index v : m_.neighbors(u)) around.push_back(v);
    for (Index x : around) {
      std::vector<Index> star_img;
      bool full = img_[x] != kNone;
      if (full) star_img.push_back(img_[x]);
      for (Index v : m_.neighbors(x)) {
        if (img_[v] == kNone) {
          full = false;
        } else {
          star_img.push_back(img_[v]);
        }
      }
      std::sort(star_img.begin(), star_img.end());
      if (std::adjacent_find(star_img.begin(), star_img.end()) != star_img.end()) return false;
      if (full && !has_witness(x)) return false;
    }
    return true;
  }

  bool has_witness(Index x) const {
    std::vector<Simplex> imgs;
    for (const auto& s : m_.incident(x)) {
      std::vector<Index> image;
      for (Index v : s) image.push_back(img_[v]);
      imgs.push_back(w_.complex.to_simplex(sorted(image)));
    }
    std::vector<VertexId> verts{w_.complex.vertex(img_[x])};
    for (Index v : m_.neighbors(x)) verts.push_back(w_.complex.vertex(img_[v]));
    return target_.witness(imgs, verts).has_value();
  }

  static std::vector<Index> sorted(std::vector<Index> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  void extend(std::size_t k) {
    if (stop_) return;
    if (k == order_.size()) {
      std::map<VertexId, VertexId> map;
      for (Index i = 0; i < m_.num_vertices(); ++i) map.emplace(m_.vertex(i), w_.complex.vertex(img_[i]));
      const SimplicialMap f(m_, w_.complex, std::move(map));
      std::map<VertexId, std::size_t> witnesses;
      if (check_with(m_, target_, f, witnesses).empty()) {
        ++found_;
        if (!(*visit_)(Immersion{f, std::move(witnesses)})) stop_ = true;
      }
      return;
    }
    const Index u = order_[k];
    std::vector<Index> candidates;
    if (anchor_[k] == kNone) {
      for (Index c = 0; c < w_.complex.num_vertices(); ++c) candidates.push_back(c);
    } else {
      const auto nb = w_.complex.neighbors(img_[anchor_[k]]);
      candidates.assign(nb.begin(), nb.end());
    }
    for (Index c : candidates) {
      img_[u] = c;
      if (consistent(u)) extend(k + 1);
      img_[u] = kNone;
      if (stop_) return;
    }
  }

  const SimplicialComplex& m_;
  const BranchedManifold& w_;
  Target target_;
  std::vector<Index> order_;
  std::vector<Index> anchor_;
  std::vector<Index> img_;
  const std::function<bool(const Immersion&)>* visit_ = nullptr;
  std::size_t found_ = 0;
  bool stop_ = false;
};

}  // namespace

std::optional<Immersion> find_immersion(const SimplicialComplex& m, const BranchedManifold& w) {
  if (m.empty() || w.complex.empty()) return std::nullopt;
  std::optional<Immersion> out;
  ImmersionSearch(m, w).run([&](const Immersion& im) {
    out = im;
    return false;
  });
  return out;
}

std::size_t count_immersions(const SimplicialComplex& m, const BranchedManifold& w, std::size_t limit) {
  if (m.empty() || w.complex.empty() || limit == 0) return 0;
  std::size_t n = 0;
  ImmersionSearch(m, w).run([&](const Immersion&) { return ++n < limit; });
  return n;
}

}  // namespace lcdkit
