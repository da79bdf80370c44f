#include "grprod/recognition.hpp"

#include <algorithm>
#include <set>

#include "grprod/error.hpp"
#include "grprod/join.hpp"

namespace grprod {

namespace {

VertexSet part_containing(const SimpleGraph& g, VertexSet lambda, Vertex v) {
  for (VertexSet part : join_parts(g, lambda)) {
    if (part.contains(v)) return part;
  }
  return {};
}

using Levels = std::vector<ZoomLevel>;

// Depth-first chain search towards G_v. Failed types are remembered; the
// outcome from a given type does not depend on how it was reached.
class ChainSearch {
 public:
  ChainSearch(const SimpleGraph& g, Vertex v, ChainVariant variant) : g_(g), v_(v), variant_(variant) {}

  std::optional<Levels> from(VertexSet upsilon) {
    if (failed_.contains(upsilon)) return std::nullopt;
    if (variant_ == ChainVariant::plain) {
      if (auto r = descend(upsilon, std::nullopt, upsilon)) return r;
    } else {
      for (VertexSet l : thick_components(g_, upsilon)) {
        if (!l.contains(v_) || g_.is_clique(l)) continue;
        if (auto r = descend(l, l, l)) return r;
      }
    }
    failed_.insert(upsilon);
    return std::nullopt;
  }

 private:
  // Tries every maximal product of `ambient` through v; `isolation_scope` is the
  // type in which isolated cliques are excluded (plain variant only).
  std::optional<Levels> descend(VertexSet ambient, std::optional<VertexSet> thick, VertexSet isolation_scope) {
    for (VertexSet p : maximal_join_subsets(g_, ambient)) {
      if (!p.contains(v_)) continue;
      if (variant_ == ChainVariant::plain && is_isolated_clique_type(g_, isolation_scope, p)) continue;
      const VertexSet c = clique_factor(g_, p);
      if (c == VertexSet::single(v_)) {
        if (variant_ == ChainVariant::thick && !last_factor_normalizer_condition(g_, c)) continue;
        return Levels{ZoomLevel{thick, p, c}};
      }
      if (!c.empty()) continue;
      const VertexSet f = part_containing(g_, p, v_);
      if (auto rest = from(f)) {
        rest->insert(rest->begin(), ZoomLevel{thick, p, f});
        return rest;
      }
    }
    return std::nullopt;
  }

  const SimpleGraph& g_;
  Vertex v_;
  ChainVariant variant_;
  std::set<VertexSet> failed_;
};

void check_thick_hypotheses(const SimpleGraph& g) {
  if (g.size() < 2) throw InputError("thick chains need a graph with at least two vertices");
  if (!is_strongly_reduced(g)) throw InputError("thick chains need a strongly reduced graph");
}

}  // namespace

VertexSet ZoomChain::last(const SimpleGraph& g) const { return levels.empty() ? g.vertices() : levels.back().factor; }

std::vector<VertexSet> ZoomChain::types(const SimpleGraph& g) const {
  std::vector<VertexSet> out{g.vertices()};
  for (const ZoomLevel& l : levels) {
    if (l.thick) out.push_back(*l.thick);
    out.push_back(l.product);
    out.push_back(l.factor);
  }
  return out;
}

std::vector<Parabolic> ZoomChain::parabolics(const PresentationPtr& p) const {
  std::vector<Parabolic> out;
  for (VertexSet t : types(p->graph())) out.push_back(Parabolic::standard(p, t));
  return out;
}

std::optional<ZoomChain> find_zoom_chain(const SimpleGraph& g, Vertex v, ChainVariant variant) {
  g.check_vertex(v);
  if (variant == ChainVariant::thick) check_thick_hypotheses(g);
  if (variant == ChainVariant::plain && g.vertices() == VertexSet::single(v)) return ZoomChain{variant, {}};
  ChainSearch search(g, v, variant);
  auto levels = search.from(g.vertices());
  if (!levels) return std::nullopt;
  return ZoomChain{variant, std::move(*levels)};
}

std::optional<ZoomChain> find_zoom_chain(const PresentationPtr& p, Vertex v, ChainVariant variant) {
  return find_zoom_chain(p->graph(), v, variant);
}

VertexSet untransvectable_via_chains(const SimpleGraph& g, ChainVariant variant) {
  if (variant == ChainVariant::thick) check_thick_hypotheses(g);
  VertexSet out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (find_zoom_chain(g, v, variant)) out.insert(v);
  }
  return out;
}

VertexSet untransvectable_via_chains(const PresentationPtr& p, ChainVariant variant) {
  return untransvectable_via_chains(p->graph(), variant);
}

bool last_factor_normalizer_condition(const SimpleGraph& g, VertexSet factor) {
  if (factor.empty() || !g.is_clique(factor)) return false;
  const VertexSet bound = factor | g.orthogonal(factor);
  bool ok = true;
  for_each_subset(factor, [&](VertexSet theta) {
    if (!theta.empty() && !(theta | g.orthogonal(theta)).subset_of(bound)) ok = false;
  });
  return ok;
}

bool is_valid_chain(const SimpleGraph& g, const ZoomChain& chain, VertexSet target) {
  if (chain.levels.empty()) return chain.variant == ChainVariant::plain && g.vertices() == target;
  VertexSet previous = g.vertices();
  for (std::size_t j = 0; j < chain.levels.size(); ++j) {
    const ZoomLevel& level = chain.levels[j];
    VertexSet ambient = previous;
    if (chain.variant == ChainVariant::thick) {
      if (!level.thick) return false;
      const auto thick = thick_components(g, previous);
      if (std::find(thick.begin(), thick.end(), *level.thick) == thick.end() || g.is_clique(*level.thick)) return false;
      ambient = *level.thick;
    } else if (level.thick) {
      return false;
    }
    const auto maximal = maximal_join_subsets(g, ambient);
    if (std::find(maximal.begin(), maximal.end(), level.product) == maximal.end()) return false;
    if (chain.variant == ChainVariant::plain && is_isolated_clique_type(g, previous, level.product)) return false;
    const VertexSet c = clique_factor(g, level.product);
    if (j + 1 < chain.levels.size()) {
      const auto fs = factor_types(g, level.product);
      if (!c.empty() || std::find(fs.begin(), fs.end(), level.factor) == fs.end()) return false;
    } else if (level.factor != c) {
      return false;
    }
    previous = level.factor;
  }
  if (chain.variant == ChainVariant::thick && !last_factor_normalizer_condition(g, previous)) return false;
  return previous == target;
}

bool is_special_subproduct(const SimpleGraph& g, VertexSet lambda, VertexSet s) {
  return !(s | g.orthogonal(s)).subset_of(lambda | g.orthogonal(lambda));
}

QPropertyReport q_property_report(const Parabolic& p) {
  const SimpleGraph& g = p.presentation().graph();
  const VertexSet lambda = p.type();
  const auto maximal = maximal_join_subsets(g, g.vertices());
  const auto parts = lambda.empty() ? std::vector<VertexSet>{} : join_parts(g, lambda);

  std::vector<VertexSet> special;
  const std::uint64_t combos = std::uint64_t{1} << parts.size();
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    VertexSet s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if ((mask >> i) & 1U) s |= parts[i];
    }
    if (is_special_subproduct(g, lambda, s)) special.push_back(s);
  }
  std::sort(special.begin(), special.end(),
            [](VertexSet a, VertexSet b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });

  const Parabolic c0 = clique_factor(p);
  QPropertyReport report{
      .maximal_product = std::find(maximal.begin(), maximal.end(), lambda) != maximal.end(),
      .isolated_clique_type = is_isolated_clique_type(g, g.vertices(), lambda),
      .clique_factor = c0,
      .clique_factor_trivial = c0.is_trivial(),
      .special_subproducts = {},
      .cofactors = clique_inclusive_cofactors(p),
      .factors = factors(p),
      .thick_free_factors = thick_free_factors(p),
  };
  for (VertexSet s : special) report.special_subproducts.push_back(Parabolic::canonical(p.conjugator(), s));
  return report;
}

}  // namespace grprod
