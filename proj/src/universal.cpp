#include "lcdkit/universal.hpp"

#include <algorithm>

#include "lcdkit/error.hpp"
#include "lcdkit/isomorphism.hpp"

namespace lcdkit {

VertexId geography_vertex(std::size_t k) { return VertexId("g" + std::to_string(k)); }

std::string witness_prefix(std::size_t i) { return "q" + std::to_string(i) + "."; }

ModelSet models_from_branched(const BranchedManifold& w, const std::vector<ImmersedWitness>& witnesses) {
  ModelSet ms;
  ms.dim = w.dim;
  if (witnesses.empty()) return ms;
  if (!is_nice(w)) throw Error("the branched manifold is not nicely triangulated");
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const auto& wit = witnesses[i];
    const auto check = check_immersion(wit.complex, w, wit.immersion.map);
    if (!check.immersion) throw Error("witness " + std::to_string(i) + ": " + check.reason);
    for (const auto& u : wit.complex.vertices()) {
      auto star = closed_star(wit.complex, u);
      Labeling zeta;
      for (const auto& v : star.vertices()) zeta.vertex_labels.emplace(v, wit.immersion.map(v).name());
      bool seen = false;
      for (const auto& m : ms.models) {
        IsomorphismConstraints c;
        c.base = std::make_pair(m.center, u);
        c.source_labels = &*m.labeling;
        c.target_labels = &zeta;
        if (find_isomorphism(m.complex, star, c)) {
          seen = true;
          break;
        }
      }
      if (!seen) ms.models.push_back(LocalModel{std::move(star), u, std::move(zeta), w.dim});
    }
  }
  return ms;
}

std::size_t default_radius(const ModelSet& ms) {
  std::size_t diam = 0;
  for (const auto& m : ms.models) diam = std::max(diam, diameter(m.complex));
  return std::max<std::size_t>(2, diam + 1);
}

UniversalBuild build_universal(const ModelSet& ms, const std::vector<SimplicialComplex>& witnesses,
                               std::optional<std::size_t> radius) {
  ms.check();
  UniversalBuild b;
  b.models = ms;
  b.witnesses = witnesses;
  std::size_t diam = 0;
  for (const auto& m : ms.models) diam = std::max(diam, diameter(m.complex));
  b.radius = radius ? *radius : default_radius(ms);
  if (b.radius < 2 || b.radius <= diam) {
    throw Error("radius d = " + std::to_string(b.radius) +
                " must be at least 2 and exceed the largest model diameter " + std::to_string(diam));
  }
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    if (witnesses[i].dim() != ms.dim) throw Error("witness " + std::to_string(i) + " has the wrong dimension");
    if (!is_modeled_on(witnesses[i], ms)) {
      throw Error("witness " + std::to_string(i) + " is not modeled on the model set");
    }
    b.q = complex_union(b.q, prefixed(witnesses[i], witness_prefix(i)));
  }
  b.w.dim = ms.dim;
  if (b.q.empty()) return b;

  b.coloring = compute_d_coloring(b.q, b.radius);
  b.geographies = geographize(b.q, b.coloring, b.radius);
  const auto& geos = b.geographies.geographies;
  for (const auto& g : geos) b.psi.push_back(g.center_color);

  auto theta = [&](const VertexId& v) { return geography_vertex(b.geographies.geography_index(v)); };
  for (const auto& v : b.q.vertices()) {
    if (b.coloring.color_of(v) != b.psi[b.geographies.geography_index(v)]) {
      throw InternalError("Psi is not well defined at " + v.name());
    }
  }

  std::vector<Simplex> simplices;
  for (const auto& s : b.q.maximal_simplices()) {
    std::vector<VertexId> img;
    for (const auto& v : s) img.push_back(theta(v));
    simplices.emplace_back(img);
  }
  b.w.complex = SimplicialComplex::from_simplices(simplices);

  // preimages of each geography vertex, least first
  std::vector<std::vector<VertexId>> fibers(geos.size());
  for (const auto& v : b.q.vertices()) fibers[b.geographies.geography_index(v)].push_back(v);

  for (std::size_t k = 0; k < geos.size(); ++k) {
    const VertexId x = geography_vertex(k);
    LocalProjection p;
    p.domain = closed_star(b.w.complex, x);
    for (const auto& g : p.domain.vertices()) {
      const auto idx = static_cast<std::size_t>(std::stoul(g.name().substr(1)));
      p.vertex_map.emplace(g, color_vertex(b.psi[idx]));
    }
    const auto star_q = closed_star(b.q, fibers[k].front());
    std::map<VertexId, VertexId> to_colors;
    for (const auto& v : star_q.vertices()) to_colors.emplace(v, color_vertex(b.coloring.color_of(v)));
    p.chart = relabel(star_q, to_colors);
    std::set<std::vector<Simplex>> seen;
    for (const auto& q : fibers[k]) {
      std::vector<Simplex> sheet;
      for (const auto& s : closed_star(b.q, q).maximal_simplices()) {
        std::vector<VertexId> img;
        for (const auto& v : s) img.push_back(theta(v));
        sheet.emplace_back(img);
      }
      std::sort(sheet.begin(), sheet.end());
      if (seen.insert(sheet).second) p.sheets.push_back(SimplicialComplex::from_simplices(sheet));
    }
    b.w.projections.push_back(std::move(p));
  }

  b.report = validate_branched(b.w);
  if (!b.report.ok()) {
    throw InternalError("universal branched manifold failed validation: " + b.report.violations.front().detail);
  }

  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    std::map<VertexId, VertexId> map;
    for (const auto& v : witnesses[i].vertices()) map.emplace(v, theta(VertexId(witness_prefix(i) + v.name())));
    const SimplicialMap f(witnesses[i], b.w.complex, std::move(map));
    auto check = check_immersion(witnesses[i], b.w, f);
    if (!check.immersion) {
      throw InternalError("Theta_G is not an immersion on witness " + std::to_string(i) + ": " + check.reason);
    }
    b.theta.push_back(std::move(*check.immersion));
  }
  return b;
}

Immersion canonical_immersion(const UniversalBuild& build, const SimplicialComplex& m,
                              const Coloring* coloring) {
  if (!coloring) {
    for (std::size_t i = 0; i < build.witnesses.size(); ++i) {
      if (build.witnesses[i] == m) return build.theta[i];
    }
  }
  const Coloring own = coloring ? *coloring : compute_d_coloring(m, build.radius);
  const auto g = geographize(m, own, build.radius);
  const auto& geos = build.geographies.geographies;
  std::map<VertexId, VertexId> map;
  for (const auto& v : m.vertices()) {
    const auto& gv = g.labeling.geography_of.at(v);
    const auto it = std::lower_bound(geos.begin(), geos.end(), gv);
    if (it == geos.end() || !(*it == gv)) {
      throw Error("witness set not saturated: the geography of vertex " + v.name() +
                  " does not occur in the build");
    }
    map.emplace(v, geography_vertex(static_cast<std::size_t>(it - geos.begin())));
  }
  if (!is_simplicial(m, build.w.complex, map)) {
    throw Error("witness set not saturated: the geography map is not simplicial");
  }
  const SimplicialMap f(m, build.w.complex, std::move(map));
  auto check = check_immersion(m, build.w, f);
  if (!check.immersion) throw Error("geography map is not an immersion: " + check.reason);
  return std::move(*check.immersion);
}

std::vector<std::string> EquivalenceReport::modeled_names() const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (e.modeled) out.push_back(e.name);
  }
  return out;
}

std::vector<std::string> EquivalenceReport::immersed_names() const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (e.immersed) out.push_back(e.name);
  }
  return out;
}

std::vector<std::string> EquivalenceReport::disagreements() const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (e.modeled != e.immersed) out.push_back(e.name);
  }
  return out;
}

EquivalenceReport verify_equivalence(const ModelSet& ms, const BranchedManifold& w,
                                     std::size_t max_vertices) {
  if (ms.dim != 1 && ms.dim != 2) throw Error("equivalence checks support dimensions 1 and 2 only");
  EquivalenceReport report;
  report.max_vertices = max_vertices;
  EnumerationOptions opts;
  opts.max_vertices = max_vertices;
  std::map<std::string, std::size_t> seen;
  for (auto& k : enumerate_closed_manifolds(ms.dim, opts)) {
    EquivalenceEntry e;
    e.name = manifold_name(k);
    if (ms.dim == 2) {
      e.name += "/" + std::to_string(k.num_vertices()) + "v";
      const auto n = ++seen[e.name];
      if (n > 1) e.name += "#" + std::to_string(n);
    }
    e.modeled = is_modeled_on(k, ms).has_value();
    e.immersed = find_immersion(k, w).has_value();
    e.complex = std::move(k);
    report.entries.push_back(std::move(e));
  }
  return report;
}

EquivalenceReport verify_equivalence(const ModelSet& ms, const UniversalBuild& build,
                                     std::size_t max_vertices) {
  return verify_equivalence(ms, build.w, max_vertices);
}

bool geography_overlap_holds(const UniversalBuild& build) {
  if (build.radius == 0) return true;
  const auto& gl = build.geographies.labeling;
  for (const auto& u : build.q.vertices()) {
    const auto& cu = gl.geography_of.at(u).chart;
    for (const auto& v : build.q.neighbors(u)) {
      const auto& cv = gl.geography_of.at(v).chart;
      const auto z = color_vertex(build.coloring.color_of(v));
      if (!neighborhood(cu, z, build.radius - 1).is_subcomplex_of(cv)) return false;
    }
  }
  return true;
}

}  // namespace lcdkit
