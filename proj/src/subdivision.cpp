#include "lcdkit/subdivision.hpp"

#include <algorithm>

#include "lcdkit/error.hpp"
#include "lcdkit/isomorphism.hpp"

namespace lcdkit {

namespace {

/// Maximal simplices under construction, with their origin in the input.
struct Work {
  std::set<Simplex> maximal;
  std::map<Simplex, Simplex> origin;
  std::set<VertexId> names;
  std::set<VertexId> added;

  explicit Work(const SimplicialComplex& k) : names(k.vertices().begin(), k.vertices().end()) {
    for (const auto& s : k.maximal_simplices()) {
      maximal.insert(s);
      origin.emplace(s, s);
    }
  }

  VertexId fresh(const std::string& stem) const {
    for (std::size_t i = 0;; ++i) {
      VertexId v(stem + std::to_string(i));
      if (!names.contains(v)) return v;
    }
  }

  void stellar(const Simplex& sigma, const VertexId& x) {
    if (names.contains(x)) throw Error("vertex name already in use: " + x.name());
    const auto it = maximal.find(sigma);
    if (it == maximal.end()) throw InternalError("stellar step on a non-maximal simplex");
    const Simplex orig = origin.at(sigma);
    maximal.erase(it);
    origin.erase(sigma);
    for (const auto& facet : sigma.facets()) {
      const Simplex s = facet.with(x);
      maximal.insert(s);
      origin.emplace(s, orig);
    }
    names.insert(x);
    added.insert(x);
  }

  SubdivisionRecord finish(const SimplicialComplex& original) const {
    const std::vector<Simplex> ms(maximal.begin(), maximal.end());
    return SubdivisionRecord{original, SimplicialComplex::from_simplices(ms), origin, added};
  }
};

void require_top(const SimplicialComplex& k, const Simplex& sigma) {
  if (!k.contains(sigma)) throw Error("simplex " + to_string(sigma) + " is not in the complex");
  if (sigma.dim() != k.dim()) {
    throw Error("simplex " + to_string(sigma) + " is not top-dimensional");
  }
  if (sigma.dim() < 2) throw Error("stellar subdivision needs dimension n >= 2");
}

bool any_name_starts_with(const SimplicialComplex& k, const std::string& stem) {
  return std::any_of(k.vertices().begin(), k.vertices().end(),
                     [&](const VertexId& v) { return v.name().starts_with(stem); });
}

std::string fresh_stem(const SimplicialComplex& k, const std::string& base) {
  std::string stem = base;
  while (any_name_starts_with(k, stem)) stem += base;
  return stem;
}

VertexId template_vertex(int j) { return VertexId("v" + std::to_string(j)); }

std::string join_degrees(const std::vector<std::size_t>& ds) {
  std::string out = "{";
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ds[i]);
  }
  return out + "}";
}

}  // namespace

SubdivisionRecord stellar_subdivide(const SimplicialComplex& k, const Simplex& sigma,
                                    std::optional<VertexId> name) {
  require_top(k, sigma);
  Work w(k);
  w.stellar(sigma, name ? *name : w.fresh("x"));
  return w.finish(k);
}

SubdivisionRecord chain_subdivide(const SimplicialComplex& k, const Simplex& sigma,
                                  const Simplex& tau, std::size_t count) {
  require_top(k, sigma);
  if (tau.size() + 1 != sigma.size() || !tau.is_face_of(sigma)) {
    throw Error(to_string(tau) + " is not a facet of " + to_string(sigma));
  }
  if (count == 0) throw Error("chain length must be at least 1");
  Work w(k);
  Simplex current = sigma;
  for (std::size_t i = 0; i < count; ++i) {
    const VertexId x = w.fresh("x");
    w.stellar(current, x);
    current = tau.with(x);
  }
  return w.finish(k);
}

std::size_t expected_boundary_degree(int n, std::size_t big_n, int j) {
  if (n < 1) throw Error("dimension must be at least 1");
  if (j < 0 || j > n) throw Error("vertex index out of range");
  if (big_n < 1) throw Error("N must be at least 1");
  std::size_t e = static_cast<std::size_t>(n) + 1;
  for (int i = 0; i <= n; ++i) {
    if (i != j) e += big_n + static_cast<std::size_t>(i);
  }
  return e;
}

SubdivisionRecord standard_subdivide(const SimplicialComplex& k,
                                     const std::vector<VertexId>& ordered, std::size_t big_n,
                                     std::optional<std::string> prefix) {
  const Simplex sigma(ordered);
  require_top(k, sigma);
  if (big_n < 1) throw Error("N must be at least 1");
  const std::string p = prefix ? *prefix : fresh_stem(k, "s") + ".";
  Work w(k);
  const VertexId x0(p + "x0");
  w.stellar(sigma, x0);
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const Simplex tau = sigma.without(ordered[i]);
    Simplex current = tau.with(x0);
    for (std::size_t m = 1; m <= big_n + i; ++m) {
      const VertexId x(p + "c" + std::to_string(i) + "_" + std::to_string(m));
      w.stellar(current, x);
      current = tau.with(x);
    }
  }
  return w.finish(k);
}

std::string SimplexClass::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < vertex_labels.size(); ++i) {
    if (i) out += ",";
    out += vertex_labels[i] ? *vertex_labels[i] : "_";
  }
  out += ")";
  if (simplex_label) out += ":" + *simplex_label;
  return out;
}

const FamilyEntry* StandardSubdivisionFamily::find(const SimplexClass& key) const {
  for (const auto& e : entries) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

std::optional<Label> StandardSubdivisionFamily::label_for_degree(std::size_t degree) const {
  const auto it = degree_decoder.find(degree);
  if (it == degree_decoder.end()) throw Error("no family block has boundary degree " + std::to_string(degree));
  return entries[it->second.first].key.vertex_labels[static_cast<std::size_t>(it->second.second)];
}

std::vector<VertexId> codec_order(const Simplex& s, const Labeling& labels) {
  std::vector<std::pair<std::optional<Label>, VertexId>> keyed;
  for (const auto& v : s) {
    const Label* l = labels.vertex_label(v);
    keyed.emplace_back(l ? std::optional<Label>(*l) : std::nullopt, v);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<VertexId> out;
  for (auto& [l, v] : keyed) out.push_back(std::move(v));
  return out;
}

SimplexClass simplex_class(const Simplex& s, const Labeling& labels) {
  SimplexClass c;
  for (const auto& v : codec_order(s, labels)) {
    const Label* l = labels.vertex_label(v);
    c.vertex_labels.push_back(l ? std::optional<Label>(*l) : std::nullopt);
  }
  if (const Label* l = labels.simplex_label(s)) c.simplex_label = *l;
  return c;
}

std::vector<SimplexClass> simplex_classes(const SimplicialComplex& k, const Labeling& labels) {
  std::set<SimplexClass> out;
  for (const auto& s : k.top_simplices()) out.insert(simplex_class(s, labels));
  return {out.begin(), out.end()};
}

StandardSubdivisionFamily build_family(int n, const std::vector<SimplexClass>& classes) {
  if (n <= 1) throw Error("the label codec needs dimension n >= 2");
  StandardSubdivisionFamily fam;
  fam.dim = n;
  fam.lambda = 2 * (static_cast<std::size_t>(n) + 1);
  std::size_t n_min = 1;
  while (expected_boundary_degree(n, n_min, n) <= fam.lambda) ++n_min;

  const std::set<SimplexClass> sorted(classes.begin(), classes.end());
  std::vector<VertexId> ordered;
  for (int j = 0; j <= n; ++j) ordered.push_back(template_vertex(j));
  const auto sigma = SimplicialComplex::from_simplices({Simplex(ordered)});

  std::size_t t = 0;
  for (const auto& key : sorted) {
    if (key.vertex_labels.size() != static_cast<std::size_t>(n) + 1) {
      throw Error("simplex class " + key.to_string() + " has the wrong size");
    }
    FamilyEntry e;
    e.key = key;
    e.big_n = n_min + t * (static_cast<std::size_t>(n) + 1);
    e.block = standard_subdivide(sigma, ordered, e.big_n, "").result;
    for (int j = 0; j <= n; ++j) {
      const auto d = degree(e.block, template_vertex(j));
      if (d != expected_boundary_degree(n, e.big_n, j)) {
        throw InternalError("standard subdivision has an unexpected boundary degree");
      }
      if (!fam.degree_decoder.emplace(d, std::make_pair(t, j)).second) {
        throw InternalError("family boundary degrees collide");
      }
      e.boundary_degrees.push_back(d);
    }
    if (count_automorphisms(e.block, 2) != 1) {
      throw InternalError("standard subdivision is not asymmetric");
    }
    fam.entries.push_back(std::move(e));
    ++t;
  }
  return fam;
}

StandardSubdivisionFamily build_family(const ModelSet& ms) {
  std::set<SimplexClass> classes;
  const Labeling none;
  for (const auto& m : ms.models) {
    for (const auto& c : simplex_classes(m.complex, m.labeling ? *m.labeling : none)) classes.insert(c);
  }
  return build_family(ms.dim, {classes.begin(), classes.end()});
}

SubdivisionRecord encode(const SimplicialComplex& m, const Labeling& labels,
                         const StandardSubdivisionFamily& fam) {
  if (m.empty()) return SubdivisionRecord{m, m, {}, {}};
  if (m.dim() != fam.dim || !m.is_pure()) {
    throw Error("encode needs a pure complex of dimension " + std::to_string(fam.dim));
  }
  labels.check_domain(m);
  const std::string stem = fresh_stem(m, "b");
  SubdivisionRecord rec{m, {}, {}, {}};
  std::vector<Simplex> maximal;
  std::size_t idx = 0;
  for (const auto& s : m.top_simplices()) {
    const auto key = simplex_class(s, labels);
    const FamilyEntry* e = fam.find(key);
    if (!e) {
      throw Error("simplex " + to_string(s) + " of class " + key.to_string() +
                  " has no family entry");
    }
    const auto order = codec_order(s, labels);
    const std::string p = stem + std::to_string(idx++) + ".";
    std::map<VertexId, VertexId> rename;
    for (const auto& v : e->block.vertices()) {
      rename.emplace(v, VertexId(p + v.name()));
    }
    for (std::size_t j = 0; j < order.size(); ++j) rename[template_vertex(static_cast<int>(j))] = order[j];
    for (const auto& t : e->block.top_simplices()) {
      std::vector<VertexId> img;
      for (const auto& v : t) img.push_back(rename.at(v));
      const Simplex image(img);
      maximal.push_back(image);
      rec.simplex_origin.emplace(image, s);
    }
    for (const auto& [from, to] : rename) {
      if (!m.contains(to)) rec.new_vertices.insert(to);
    }
  }
  rec.result = SimplicialComplex::from_simplices(maximal);
  return rec;
}

Decoded decode(const SimplicialComplex& encoded, const StandardSubdivisionFamily& fam) {
  if (encoded.empty()) return {};
  if (fam.entries.empty()) throw Error("the family is empty, so no block can be decoded");
  if (encoded.dim() != fam.dim || !encoded.is_pure()) {
    throw Error("decode needs a pure complex of dimension " + std::to_string(fam.dim));
  }
  using Index = SimplicialComplex::Index;
  const std::size_t nv = encoded.num_vertices();
  const std::size_t n1 = static_cast<std::size_t>(fam.dim) + 1;
  std::vector<char> high(nv);
  for (Index i = 0; i < nv; ++i) high[i] = encoded.neighbors(i).size() > fam.lambda;

  std::vector<char> seen(nv, 0);
  std::map<Simplex, std::size_t> block_class;
  std::size_t covered = 0;
  Decoded out;
  std::map<VertexId, std::optional<Label>> decoded_labels;

  for (Index start = 0; start < nv; ++start) {
    if (high[start] || seen[start]) continue;
    std::vector<Index> comp{start};
    seen[start] = 1;
    std::set<Index> boundary;
    for (std::size_t q = 0; q < comp.size(); ++q) {
      for (Index w : encoded.neighbors(comp[q])) {
        if (high[w]) {
          boundary.insert(w);
        } else if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    const std::string where = "low-degree component at vertex " + encoded.vertex(start).name();
    if (boundary.size() != n1) {
      throw Error("not covered by family blocks: " + where + " (" + std::to_string(comp.size()) +
                  " vertices) has " + std::to_string(boundary.size()) +
                  " high-degree boundary vertices, expected " + std::to_string(n1));
    }
    std::set<Index> members(comp.begin(), comp.end());
    members.insert(boundary.begin(), boundary.end());
    std::set<Simplex> tops;
    for (Index c : comp) {
      for (const auto& s : encoded.incident(c)) {
        if (s.size() != n1) continue;
        for (Index x : s) {
          if (!members.contains(x)) throw Error("block boundary leaks: " + where);
        }
        tops.insert(encoded.to_simplex(s));
      }
    }
    const std::vector<Simplex> top_list(tops.begin(), tops.end());
    const auto block = SimplicialComplex::from_simplices(top_list);
    covered += top_list.size();

    std::vector<std::size_t> degrees;
    std::optional<std::size_t> entry;
    std::vector<VertexId> by_position(n1);
    std::vector<char> filled(n1, 0);
    bool match = true;
    for (Index b : boundary) {
      const auto d = degree(block, encoded.vertex(b));
      degrees.push_back(d);
      const auto it = fam.degree_decoder.find(d);
      if (it == fam.degree_decoder.end()) {
        match = false;
        continue;
      }
      const auto [t, j] = it->second;
      if (entry && *entry != t) match = false;
      entry = t;
      if (filled[static_cast<std::size_t>(j)]) match = false;
      filled[static_cast<std::size_t>(j)] = 1;
      by_position[static_cast<std::size_t>(j)] = encoded.vertex(b);
    }
    if (!match || !entry) {
      throw Error(where + " has boundary degrees " + join_degrees(degrees) +
                  " matching no family entry");
    }
    const FamilyEntry& e = fam.entries[*entry];

    Labeling tl;
    Labeling bl;
    for (std::size_t j = 0; j < n1; ++j) {
      tl.vertex_labels.emplace(template_vertex(static_cast<int>(j)), std::to_string(j));
      bl.vertex_labels.emplace(by_position[j], std::to_string(j));
    }
    IsomorphismConstraints ic;
    ic.source_labels = &tl;
    ic.target_labels = &bl;
    if (!find_isomorphism(e.block, block, ic)) {
      throw Error(where + " is not a copy of the block for class " + e.key.to_string());
    }

    const Simplex sigma(by_position);
    if (!block_class.emplace(sigma, *entry).second) {
      throw Error("two blocks share the boundary simplex " + to_string(sigma));
    }
    for (std::size_t j = 0; j < n1; ++j) {
      const auto& lab = e.key.vertex_labels[j];
      const auto [it, inserted] = decoded_labels.emplace(by_position[j], lab);
      if (!inserted && it->second != lab) {
        throw Error("inconsistent labels decoded for vertex " + by_position[j].name());
      }
    }
    if (e.key.simplex_label) out.labeling.simplex_labels.emplace(sigma, *e.key.simplex_label);
  }

  const auto total = encoded.simplices_of_dim(fam.dim).size();
  if (covered != total) {
    for (const auto& s : encoded.simplices_of_dim(fam.dim)) {
      const auto idx = encoded.to_indices(s);
      if (std::all_of(idx.begin(), idx.end(), [&](Index i) { return high[i]; })) {
        throw Error("top simplex " + to_string(s) + " lies in no family block");
      }
    }
    throw InternalError("block coverage count mismatch");
  }
  std::vector<Simplex> simplices;
  for (const auto& [s, t] : block_class) simplices.push_back(s);
  out.complex = SimplicialComplex::from_simplices(simplices);
  for (const auto& [v, lab] : decoded_labels) {
    if (lab) out.labeling.vertex_labels.emplace(v, *lab);
  }
  return out;
}

std::map<Simplex, SimplicialComplex> blocks(const SubdivisionRecord& rec) {
  std::map<Simplex, std::vector<Simplex>> grouped;
  for (const auto& [s, orig] : rec.simplex_origin) grouped[orig].push_back(s);
  std::map<Simplex, SimplicialComplex> out;
  for (const auto& [orig, ss] : grouped) out.emplace(orig, SimplicialComplex::from_simplices(ss));
  return out;
}

}  // namespace lcdkit
