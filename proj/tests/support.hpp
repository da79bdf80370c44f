#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "grprod/element.hpp"
#include "grprod/graph.hpp"
#include "grprod/presentation.hpp"

namespace grprod::test {

inline SimpleGraph named_graph(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& edges) {
  return SimpleGraph(std::move(names), edges);
}

inline SimpleGraph cycle(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return SimpleGraph::from_index_edges(n, e);
}

inline SimpleGraph complete(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return SimpleGraph::from_index_edges(n, e);
}

inline SimpleGraph empty_graph(std::size_t n) { return SimpleGraph::from_index_edges(n, {}); }

/// Path on the given names, in order.
inline SimpleGraph path(const std::vector<std::string>& names) {
  std::vector<std::pair<std::string, std::string>> e;
  for (std::size_t i = 0; i + 1 < names.size(); ++i) e.emplace_back(names[i], names[i + 1]);
  return SimpleGraph(names, e);
}

inline SimpleGraph edge_ab() { return SimpleGraph({"a", "b"}, std::vector<SimpleGraph::Edge>{{"a", "b"}}); }
inline SimpleGraph free_ab() { return SimpleGraph({"a", "b"}, std::vector<SimpleGraph::Edge>{}); }

inline PresentationPtr uniform_cyclic(const SimpleGraph& g, std::int64_t order) {
  return Presentation::uniform(g, VertexLabel::cyclic(order));
}

inline VertexSet set_of(std::initializer_list<Vertex> vs) {
  VertexSet s;
  for (Vertex v : vs) s.insert(v);
  return s;
}

inline Syllable syl(Vertex v, std::int64_t e) { return Syllable{v, Letter::power(e)}; }

inline Element elem(const PresentationPtr& p, std::initializer_list<std::pair<Vertex, std::int64_t>> word) {
  std::vector<Syllable> raw;
  for (auto [v, e] : word) raw.push_back(syl(v, e));
  return Element::normalize(p, raw);
}

/// Random graph on n vertices with edge probability 1/2.
inline SimpleGraph random_graph(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng() & 1U) e.emplace_back(i, j);
    }
  }
  return SimpleGraph::from_index_edges(n, e);
}

/// Random raw word over cyclic labels, identity letters included.
inline std::vector<Syllable> random_raw_word(std::mt19937_64& rng, const Presentation& p, std::size_t length,
                                             std::int64_t spread = 3) {
  std::vector<Syllable> out;
  std::uniform_int_distribution<std::size_t> vertex(0, p.graph().size() - 1);
  std::uniform_int_distribution<std::int64_t> exponent(-spread, spread);
  for (std::size_t i = 0; i < length; ++i) out.push_back(syl(vertex(rng), exponent(rng)));
  return out;
}

inline Element random_element(std::mt19937_64& rng, const PresentationPtr& p, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  return Element::normalize(p, random_raw_word(rng, *p, len(rng)));
}

inline VertexSet random_subset(std::mt19937_64& rng, std::size_t n) {
  return VertexSet::from_bits(rng() & VertexSet::first_n(n).bits());
}

}  // namespace grprod::test
