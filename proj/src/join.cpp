#include "grprod/join.hpp"

#include <algorithm>

#include "grprod/error.hpp"

namespace grprod {

std::vector<VertexSet> join_parts(const SimpleGraph& g, VertexSet lambda) {
  g.check_subset(lambda);
  return g.complement_components(lambda);
}

bool is_join(const SimpleGraph& g, VertexSet lambda) { return join_parts(g, lambda).size() >= 2; }

VertexSet clique_factor(const SimpleGraph& g, VertexSet lambda) {
  g.check_subset(lambda);
  VertexSet out;
  for (Vertex v : lambda) {
    if (lambda.without(v).subset_of(g.link(v))) out.insert(v);
  }
  return out;
}

std::vector<VertexSet> factor_types(const SimpleGraph& g, VertexSet lambda) {
  std::vector<VertexSet> out;
  const VertexSet c0 = clique_factor(g, lambda);
  if (!c0.empty()) out.push_back(c0);
  for (VertexSet part : join_parts(g, lambda)) {
    if (part.size() >= 2) out.push_back(part);
  }
  return out;
}

std::vector<VertexSet> cofactor_types(const SimpleGraph& g, VertexSet lambda) {
  std::vector<VertexSet> out;
  for (VertexSet part : join_parts(g, lambda)) {
    if (part.size() >= 2) out.push_back(lambda - part);
  }
  return out;
}

std::vector<VertexSet> thick_components(const SimpleGraph& g, VertexSet lambda) {
  g.check_subset(lambda);
  std::vector<VertexSet> out;
  for (VertexSet c : g.components(lambda)) {
    if (c.size() >= 2) out.push_back(c);
  }
  return out;
}

std::vector<VertexSet> maximal_join_subsets(const SimpleGraph& g, VertexSet within) {
  g.check_subset(within);
  if (within.size() > kMaxExhaustiveVertices) {
    throw EnumerationError("maximal join enumeration is limited to " + std::to_string(kMaxExhaustiveVertices) +
                           " vertices");
  }
  std::vector<VertexSet> joins;
  for_each_subset(within, [&](VertexSet s) {
    if (s.size() >= 2 && is_join(g, s)) joins.push_back(s);
  });
  // Largest first, so a candidate only has to be compared with kept sets.
  std::sort(joins.begin(), joins.end(), [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
  std::vector<VertexSet> maximal;
  for (VertexSet s : joins) {
    const bool covered =
        std::any_of(maximal.begin(), maximal.end(), [s](VertexSet m) { return s.proper_subset_of(m); });
    if (!covered) maximal.push_back(s);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

bool is_isolated_clique_type(const SimpleGraph& g, VertexSet within, VertexSet s) {
  if (s.empty() || !s.subset_of(within) || !g.is_clique(s)) return false;
  const auto comps = g.components(within);
  return std::find(comps.begin(), comps.end(), s) != comps.end();
}

}  // namespace grprod
