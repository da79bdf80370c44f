#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "grprod/graph.hpp"

namespace grprod {

/// Largest vertex count accepted by the graph enumerators.
inline constexpr std::size_t kMaxEnumerationVertices = 10;

enum class EnumerationMode {
  raw,                  ///< every labelled graph on {0..n-1}
  isomorphism_classes,  ///< one representative per isomorphism class
};

/// Canonical adjacency code: equal for two graphs iff they are isomorphic. At most 11 vertices.
[[nodiscard]] std::uint64_t canonical_code(const SimpleGraph& g);

/// Calls f(graph) for each graph on n vertices (vertex names "0".."n-1").
void for_each_graph(std::size_t n, EnumerationMode mode, const std::function<void(const SimpleGraph&)>& f);

/// One representative per isomorphism class on n vertices, in a deterministic order.
[[nodiscard]] const std::vector<SimpleGraph>& isomorphism_classes(std::size_t n);

/// Predicate deciding whether vertex v of the first graph may map to vertex w of the second.
using VertexCompatibility = std::function<bool(Vertex v, Vertex w)>;

/// First isomorphism from g to h (as image[v]) in lexicographic search order, if any.
/// The search maps vertices of g in declaration order and tries targets in declaration order.
[[nodiscard]] std::optional<std::vector<Vertex>> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                                                                  const VertexCompatibility& compatible = {});

}  // namespace grprod
