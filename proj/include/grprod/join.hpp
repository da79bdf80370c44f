#pragma once

#include <vector>

#include "grprod/graph.hpp"

namespace grprod {

// Type-level product calculus: everything here works on vertex subsets of one graph.

/// Join parts of the subgraph induced on `lambda` (components of its complement).
[[nodiscard]] std::vector<VertexSet> join_parts(const SimpleGraph& g, VertexSet lambda);

/// Whether `lambda` splits as a join of at least two non-empty parts.
[[nodiscard]] bool is_join(const SimpleGraph& g, VertexSet lambda);

/// Vertices of `lambda` adjacent to every other vertex of `lambda`.
[[nodiscard]] VertexSet clique_factor(const SimpleGraph& g, VertexSet lambda);

/// The clique factor (when non-empty) followed by the join parts with at least two vertices.
[[nodiscard]] std::vector<VertexSet> factor_types(const SimpleGraph& g, VertexSet lambda);

/// For each non-clique factor F: lambda minus F. Empty when lambda is its own clique factor.
[[nodiscard]] std::vector<VertexSet> cofactor_types(const SimpleGraph& g, VertexSet lambda);

/// Connected components of `lambda` with at least two vertices.
[[nodiscard]] std::vector<VertexSet> thick_components(const SimpleGraph& g, VertexSet lambda);

/// Inclusion-maximal join subsets of `within`, ordered by mask. Capped at kMaxExhaustiveVertices.
[[nodiscard]] std::vector<VertexSet> maximal_join_subsets(const SimpleGraph& g, VertexSet within);

/// `s` is a connected component of `within` that is a clique.
[[nodiscard]] bool is_isolated_clique_type(const SimpleGraph& g, VertexSet within, VertexSet s);

}  // namespace grprod
