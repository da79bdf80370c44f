#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grprod/vertex_set.hpp"

namespace grprod {

/// Exhaustive scans over vertex subsets refuse graphs larger than this.
inline constexpr std::size_t kMaxExhaustiveVertices = 12;

/// Finite simple graph with named vertices in a fixed declaration order.
///
/// Immutable after construction. Vertex indices follow declaration order and
/// every deterministic output of the library is sorted by them.
class SimpleGraph {
 public:
  using Edge = std::pair<std::string, std::string>;

  SimpleGraph() = default;

  /// Throws InputError on duplicate names, loops, duplicate edges or unknown endpoints.
  SimpleGraph(std::vector<std::string> names, std::span<const Edge> edges);

  /// Builds from a symmetric loop-free adjacency table (one mask per vertex).
  static SimpleGraph from_adjacency(std::vector<std::string> names, std::vector<VertexSet> adjacency);

  /// Vertices named "0", "1", ... with edges given by index pairs.
  static SimpleGraph from_index_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] VertexSet vertices() const { return VertexSet::first_n(names_.size()); }
  [[nodiscard]] const std::string& name(Vertex v) const { return names_.at(v); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] std::optional<Vertex> find(std::string_view name) const;
  /// Throws InputError for an unknown name.
  [[nodiscard]] Vertex index_of(std::string_view name) const;

  // Unknown vertices throw InputError.
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return row(u).contains(v); }
  [[nodiscard]] VertexSet link(Vertex v) const { return row(v); }
  [[nodiscard]] VertexSet star(Vertex v) const { return row(v).with(v); }
  /// Vertices outside `lambda` adjacent to every vertex of `lambda`; the empty set maps to all vertices.
  [[nodiscard]] VertexSet orthogonal(VertexSet lambda) const;
  [[nodiscard]] std::size_t edge_count() const;
  /// Edges as index pairs (u < v), lexicographically ordered.
  [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> edges() const;

  [[nodiscard]] bool is_clique(VertexSet s) const;
  [[nodiscard]] bool is_connected(VertexSet s) const;
  /// Connected components of the subgraph induced on `s`, ordered by smallest vertex.
  [[nodiscard]] std::vector<VertexSet> components(VertexSet s) const;
  /// Components of the complement of the subgraph induced on `s`.
  [[nodiscard]] std::vector<VertexSet> complement_components(VertexSet s) const;

  /// The induced subgraph as a standalone graph (vertex names kept, order kept).
  [[nodiscard]] SimpleGraph induced(VertexSet s) const;
  /// Same adjacency, vertices permuted: vertex v of the result is vertex order[v] of this graph.
  [[nodiscard]] SimpleGraph permuted(std::span<const Vertex> order) const;

  /// Throws InputError unless v is a vertex.
  void check_vertex(Vertex v) const;
  /// Throws InputError unless s only uses declared vertices.
  void check_subset(VertexSet s) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  [[nodiscard]] VertexSet row(Vertex v) const {
    if (v >= adjacency_.size()) check_vertex(v);
    return adjacency_[v];
  }

  std::vector<std::string> names_;
  std::vector<VertexSet> adjacency_;
};

[[nodiscard]] bool is_transvection_free(const SimpleGraph& g);
/// True when removing some star disconnects the graph (an empty remainder is connected).
[[nodiscard]] bool has_partial_conjugation(const SimpleGraph& g);
/// Whether all x in lambda share the same link outside lambda.
[[nodiscard]] bool is_collapsible(const SimpleGraph& g, VertexSet lambda);
/// No proper collapsible subset on at least two vertices. Exhaustive; capped at kMaxExhaustiveVertices.
[[nodiscard]] bool is_strongly_reduced(const SimpleGraph& g);
/// Irreducible join factors (complement components); throws InputError on the empty graph.
[[nodiscard]] std::vector<VertexSet> join_decompose(const SimpleGraph& g);
[[nodiscard]] VertexSet untransvectable_vertices(const SimpleGraph& g);
[[nodiscard]] bool is_clique_reduced(const SimpleGraph& g);
/// All cliques of g, the empty one included, ordered by size then mask.
[[nodiscard]] std::vector<VertexSet> cliques(const SimpleGraph& g);

/// Graphviz rendering of g.
[[nodiscard]] std::string to_dot(const SimpleGraph& g, std::string_view graph_name = "G");

/// Vertex names of `s` in declaration order.
[[nodiscard]] std::vector<std::string> names_of(const SimpleGraph& g, VertexSet s);
/// Parses a list of vertex names; throws InputError on unknown names.
[[nodiscard]] VertexSet subset_of_names(const SimpleGraph& g, std::span<const std::string> names);

}  // namespace grprod
