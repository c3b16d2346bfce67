#include "lcdkit/isomorphism.hpp"

#include <algorithm>
#include <limits>

#include "lcdkit/error.hpp"

namespace lcdkit {

namespace {

using Index = SimplicialComplex::Index;
constexpr Index kUnassigned = std::numeric_limits<Index>::max();

// Joint color refinement of two complexes: vertices that can correspond under
// an isomorphism end up with equal colors.
class Refinement {
 public:
  Refinement(const SimplicialComplex& a, const SimplicialComplex& b,
             const IsomorphismConstraints& c) {
    std::map<Label, long> label_ids;
    auto label_id = [&](const Label* l) -> long {
      if (!l) return 0;
      return label_ids.emplace(*l, static_cast<long>(label_ids.size()) + 1).first->second;
    };
    const bool labeled = c.source_labels && c.target_labels;
    auto initial = [&](const SimplicialComplex& k, const Labeling* labels,
                       const std::optional<VertexId>& base) {
      std::vector<std::vector<long>> keys(k.num_vertices());
      for (Index i = 0; i < k.num_vertices(); ++i) {
        auto& key = keys[i];
        key.push_back(base && k.vertex(i) == *base ? 1 : 0);
        key.push_back(labeled ? label_id(labels->vertex_label(k.vertex(i))) : 0);
        std::vector<long> per_dim(static_cast<std::size_t>(k.dim() + 1), 0);
        std::vector<long> top_labels;
        for (const auto& s : k.incident(i)) {
          ++per_dim[s.size() - 1];
          if (labeled && static_cast<int>(s.size()) - 1 == k.dim()) {
            top_labels.push_back(label_id(labels->simplex_label(k.to_simplex(s))));
          }
        }
        key.insert(key.end(), per_dim.begin(), per_dim.end());
        std::sort(top_labels.begin(), top_labels.end());
        key.insert(key.end(), top_labels.begin(), top_labels.end());
      }
      return keys;
    };
    std::optional<VertexId> base_a, base_b;
    if (c.base) {
      base_a = c.base->first;
      base_b = c.base->second;
    }
    auto keys_a = initial(a, c.source_labels, base_a);
    auto keys_b = initial(b, c.target_labels, base_b);
    std::size_t classes = assign(keys_a, keys_b);
    for (std::size_t round = 0; round < a.num_vertices() + 1; ++round) {
      auto next = [&](const SimplicialComplex& k, const std::vector<int>& color) {
        std::vector<std::vector<long>> keys(k.num_vertices());
        for (Index i = 0; i < k.num_vertices(); ++i) {
          keys[i].push_back(color[i]);
          std::vector<long> nb;
          for (Index j : k.neighbors(i)) nb.push_back(color[j]);
          std::sort(nb.begin(), nb.end());
          keys[i].insert(keys[i].end(), nb.begin(), nb.end());
        }
        return keys;
      };
      auto na = next(a, color_a);
      auto nb = next(b, color_b);
      const std::size_t refined = assign(na, nb);
      if (refined == classes) break;
      classes = refined;
    }
  }

  std::vector<int> color_a;
  std::vector<int> color_b;

  bool histograms_match() const {
    auto ha = color_a;
    auto hb = color_b;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    return ha == hb;
  }

 private:
  std::size_t assign(const std::vector<std::vector<long>>& ka,
                     const std::vector<std::vector<long>>& kb) {
    std::map<std::vector<long>, int> ids;
    for (const auto& k : ka) ids.emplace(k, 0);
    for (const auto& k : kb) ids.emplace(k, 0);
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    color_a.assign(ka.size(), 0);
    color_b.assign(kb.size(), 0);
    for (std::size_t i = 0; i < ka.size(); ++i) color_a[i] = ids.at(ka[i]);
    for (std::size_t i = 0; i < kb.size(); ++i) color_b[i] = ids.at(kb[i]);
    return ids.size();
  }
};

// Branching order: start vertex, then repeatedly the unassigned vertex with
// the most already-ordered neighbors (ties: least index).
struct Plan {
  std::vector<Index> order;
  std::vector<Index> anchor;  // an earlier neighbor, or kUnassigned
  // simplices (dim >= 1) containing order[k] whose other vertices precede it
  std::vector<std::vector<std::vector<Index>>> closing;
};

Plan make_plan(const SimplicialComplex& k, std::optional<Index> start) {
  const std::size_t n = k.num_vertices();
  Plan plan;
  std::vector<std::size_t> position(n, n);
  std::vector<std::size_t> ordered_neighbors(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Index pick = kUnassigned;
    if (step == 0 && start) {
      pick = *start;
    } else {
      for (Index i = 0; i < n; ++i) {
        if (position[i] != n) continue;
        if (pick == kUnassigned || ordered_neighbors[i] > ordered_neighbors[pick]) pick = i;
      }
    }
    position[pick] = step;
    plan.order.push_back(pick);
    Index anchor = kUnassigned;
    std::size_t best = n;
    for (Index j : k.neighbors(pick)) {
      if (position[j] < best) {
        best = position[j];
        anchor = j;
      }
      ++ordered_neighbors[j];
    }
    plan.anchor.push_back(anchor);
    std::vector<std::vector<Index>> closing;
    for (const auto& s : k.incident(pick)) {
      if (s.size() < 2) continue;
      const bool closes = std::all_of(s.begin(), s.end(), [&](Index j) {
        return j == pick || position[j] < step;
      });
      if (closes) closing.push_back(s);
    }
    plan.closing.push_back(std::move(closing));
  }
  return plan;
}

class IsoSearch {
 public:
  IsoSearch(const SimplicialComplex& a, const SimplicialComplex& b,
            const IsomorphismConstraints& c,
            const std::function<bool(const SimplicialMap&)>& visit)
      : a_(a), b_(b), c_(c), visit_(visit) {}

  std::size_t run() {
    if (a_.num_vertices() != b_.num_vertices() || a_.f_vector() != b_.f_vector()) return 0;
    if (a_.empty()) {
      emit();
      return found_;
    }
    std::optional<Index> start;
    if (c_.base) {
      auto sa = a_.find_index(c_.base->first);
      auto sb = b_.find_index(c_.base->second);
      if (!sa || !sb) return 0;
      start = *sa;
      base_target_ = *sb;
    }
    refinement_.emplace(a_, b_, c_);
    if (!refinement_->histograms_match()) return 0;
    if (c_.source_labels && c_.target_labels) {
      index_top_labels(a_, *c_.source_labels, top_a_);
      index_top_labels(b_, *c_.target_labels, top_b_);
    }
    plan_ = make_plan(a_, start);
    fwd_.assign(a_.num_vertices(), kUnassigned);
    bwd_.assign(b_.num_vertices(), kUnassigned);
    extend(0);
    return found_;
  }

 private:
  void index_top_labels(const SimplicialComplex& k, const Labeling& l,
                        std::map<std::vector<Index>, Label>& out) {
    for (const auto& [s, label] : l.simplex_labels) {
      if (k.contains(s) && s.dim() == k.dim()) out.emplace(k.to_indices(s), label);
    }
  }

  bool top_labels_match(const std::vector<Index>& sa, const std::vector<Index>& sb) const {
    if (top_a_.empty() && top_b_.empty()) return true;
    auto ia = top_a_.find(sa);
    auto ib = top_b_.find(sb);
    if ((ia == top_a_.end()) != (ib == top_b_.end())) return false;
    return ia == top_a_.end() || ia->second == ib->second;
  }

  bool consistent(std::size_t k, Index u, Index w) const {
    const auto& closing = plan_.closing[k];
    std::vector<Index> img;
    for (const auto& s : closing) {
      img.clear();
      for (Index x : s) img.push_back(x == u ? w : fwd_[x]);
      std::sort(img.begin(), img.end());
      if (!b_.contains_indices(img)) return false;
      if (static_cast<int>(s.size()) - 1 == a_.dim() && !top_labels_match(s, img)) return false;
    }
    // the target must not have extra simplices among mapped vertices
    std::size_t target_closing = 0;
    for (const auto& t : b_.incident(w)) {
      if (t.size() < 2) continue;
      const bool closes = std::all_of(t.begin(), t.end(),
                                      [&](Index y) { return y == w || bwd_[y] != kUnassigned; });
      if (closes) ++target_closing;
    }
    return target_closing == closing.size();
  }

  void extend(std::size_t k) {
    if (stop_) return;
    if (k == plan_.order.size()) {
      emit();
      return;
    }
    const Index u = plan_.order[k];
    const int want = refinement_->color_a[u];
    auto try_candidate = [&](Index w) {
      if (stop_ || bwd_[w] != kUnassigned || refinement_->color_b[w] != want) return;
      if (!consistent(k, u, w)) return;
      fwd_[u] = w;
      bwd_[w] = u;
      extend(k + 1);
      fwd_[u] = kUnassigned;
      bwd_[w] = kUnassigned;
    };
    if (k == 0 && c_.base) {
      try_candidate(base_target_);
    } else if (plan_.anchor[k] != kUnassigned) {
      const Index image = fwd_[plan_.anchor[k]];
      const auto nb = b_.neighbors(image);
      const std::vector<Index> candidates(nb.begin(), nb.end());
      for (Index w : candidates) try_candidate(w);
    } else {
      for (Index w = 0; w < b_.num_vertices(); ++w) try_candidate(w);
    }
  }

  void emit() {
    std::map<VertexId, VertexId> m;
    for (Index i = 0; i < a_.num_vertices(); ++i) m.emplace(a_.vertex(i), b_.vertex(fwd_[i]));
    ++found_;
    if (!visit_(SimplicialMap(a_, b_, std::move(m)))) stop_ = true;
  }

  const SimplicialComplex& a_;
  const SimplicialComplex& b_;
  const IsomorphismConstraints& c_;
  const std::function<bool(const SimplicialMap&)>& visit_;
  std::optional<Refinement> refinement_;
  Plan plan_;
  Index base_target_ = kUnassigned;
  std::vector<Index> fwd_;
  std::vector<Index> bwd_;
  std::map<std::vector<Index>, Label> top_a_;
  std::map<std::vector<Index>, Label> top_b_;
  std::size_t found_ = 0;
  bool stop_ = false;
};

}  // namespace

std::size_t for_each_isomorphism(const SimplicialComplex& source, const SimplicialComplex& target,
                                 const IsomorphismConstraints& constraints,
                                 const std::function<bool(const SimplicialMap&)>& visit) {
  return IsoSearch(source, target, constraints, visit).run();
}

std::optional<SimplicialMap> find_isomorphism(const SimplicialComplex& source,
                                              const SimplicialComplex& target,
                                              const IsomorphismConstraints& constraints) {
  std::optional<SimplicialMap> out;
  for_each_isomorphism(source, target, constraints, [&](const SimplicialMap& m) {
    out.emplace(m);
    return false;
  });
  return out;
}

std::size_t count_isomorphisms(const SimplicialComplex& source, const SimplicialComplex& target,
                               const IsomorphismConstraints& constraints, std::size_t limit) {
  std::size_t n = 0;
  for_each_isomorphism(source, target, constraints, [&](const SimplicialMap&) {
    ++n;
    return n < limit;
  });
  return n;
}

std::size_t count_automorphisms(const SimplicialComplex& k, std::size_t limit) {
  return count_isomorphisms(k, k, {}, limit);
}

std::size_t for_each_star_embedding(
    const SimplicialComplex& pattern, const VertexId& pattern_center, const SimplicialComplex& host,
    const VertexId& host_center,
    const std::function<bool(const std::map<VertexId, VertexId>&)>& visit) {
  const auto pc = pattern.find_index(pattern_center);
  const auto hc = host.find_index(host_center);
  if (!pc || !hc) return 0;
  if (pattern.neighbors(*pc).size() != host.neighbors(*hc).size()) return 0;
  if (pattern.incident(*pc).size() != host.incident(*hc).size()) return 0;
  if (pattern.num_vertices() > host.num_vertices()) return 0;

  const Plan plan = make_plan(pattern, *pc);
  std::vector<Index> fwd(pattern.num_vertices(), kUnassigned);
  std::vector<char> used(host.num_vertices(), 0);
  std::size_t found = 0;
  bool stop = false;
  std::vector<Index> img;

  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (stop) return;
    if (k == plan.order.size()) {
      std::map<VertexId, VertexId> m;
      for (Index i = 0; i < pattern.num_vertices(); ++i) {
        m.emplace(pattern.vertex(i), host.vertex(fwd[i]));
      }
      ++found;
      if (!visit(m)) stop = true;
      return;
    }
    const Index u = plan.order[k];
    auto try_candidate = [&](Index w) {
      if (stop || used[w]) return;
      for (const auto& s : plan.closing[k]) {
        img.clear();
        for (Index x : s) img.push_back(x == u ? w : fwd[x]);
        std::sort(img.begin(), img.end());
        if (!host.contains_indices(img)) return;
      }
      fwd[u] = w;
      used[w] = 1;
      extend(k + 1);
      fwd[u] = kUnassigned;
      used[w] = 0;
    };
    if (k == 0) {
      try_candidate(*hc);
    } else if (plan.anchor[k] != kUnassigned) {
      const auto nb = host.neighbors(fwd[plan.anchor[k]]);
      const std::vector<Index> candidates(nb.begin(), nb.end());
      for (Index w : candidates) try_candidate(w);
    } else {
      for (Index w = 0; w < host.num_vertices(); ++w) try_candidate(w);
    }
  };
  extend(0);
  return found;
}

}  // namespace lcdkit
