#include "grprod/graph_enum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "grprod/error.hpp"

namespace grprod {

namespace {

std::uint64_t code_under(const SimpleGraph& g, const std::vector<Vertex>& order) {
  // Upper triangle of the permuted adjacency matrix, row by row.
  std::uint64_t code = 0;
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1U : 0U);
    }
  }
  return code;
}

// Colour refinement; returns an isomorphism-invariant ordered partition of the vertices.
std::vector<std::vector<Vertex>> refined_cells(const SimpleGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> colour(n, 0);
  std::size_t classes = 1;
  while (true) {
    std::vector<std::pair<std::vector<std::size_t>, Vertex>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::size_t> s{colour[v]};
      std::vector<std::size_t> nbr;
      for (Vertex w : g.link(v)) nbr.push_back(colour[w]);
      std::sort(nbr.begin(), nbr.end());
      s.insert(s.end(), nbr.begin(), nbr.end());
      sig[v] = {std::move(s), v};
    }
    std::map<std::vector<std::size_t>, std::size_t> rank;
    for (const auto& [s, v] : sig) rank.emplace(s, 0);
    std::size_t r = 0;
    for (auto& [s, value] : rank) value = r++;
    for (Vertex v = 0; v < n; ++v) colour[v] = rank[sig[v].first];
    if (rank.size() == classes) break;
    classes = rank.size();
  }
  std::vector<std::vector<Vertex>> cells(classes);
  for (Vertex v = 0; v < n; ++v) cells[colour[v]].push_back(v);
  return cells;
}

void best_code(const SimpleGraph& g, const std::vector<std::vector<Vertex>>& cells, std::size_t cell,
               std::vector<Vertex>& order, std::uint64_t& best, bool& have) {
  if (cell == cells.size()) {
    const std::uint64_t c = code_under(g, order);
    if (!have || c < best) {
      best = c;
      have = true;
    }
    return;
  }
  std::vector<Vertex> members = cells[cell];
  do {
    order.insert(order.end(), members.begin(), members.end());
    best_code(g, cells, cell + 1, order, best, have);
    order.resize(order.size() - members.size());
  } while (std::next_permutation(members.begin(), members.end()));
}

std::vector<SimpleGraph> build_classes(std::size_t n) {
  if (n == 0) return {SimpleGraph::from_index_edges(0, {})};
  std::vector<SimpleGraph> out;
  std::set<std::uint64_t> seen;
  for (const SimpleGraph& base : isomorphism_classes(n - 1)) {
    const auto base_edges = base.edges();
    for_each_subset(VertexSet::first_n(n - 1), [&](VertexSet nbrs) {
      std::vector<std::pair<Vertex, Vertex>> edges = base_edges;
      for (Vertex v : nbrs) edges.emplace_back(v, n - 1);
      SimpleGraph g = SimpleGraph::from_index_edges(n, edges);
      if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
    });
  }
  return out;
}

}  // namespace

std::uint64_t canonical_code(const SimpleGraph& g) {
  if (g.size() > 11) throw EnumerationError("canonical_code supports at most 11 vertices");
  const auto cells = refined_cells(g);
  std::vector<Vertex> order;
  std::uint64_t best = 0;
  bool have = false;
  best_code(g, cells, 0, order, best, have);
  // Mix in n so graphs of different orders never collide.
  return best | (static_cast<std::uint64_t>(g.size()) << 58);
}

const std::vector<SimpleGraph>& isomorphism_classes(std::size_t n) {
  if (n > kMaxEnumerationVertices) throw EnumerationError("graph enumeration is limited to 10 vertices");
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<SimpleGraph>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<SimpleGraph> built = build_classes(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(built)).first->second;
}

void for_each_graph(std::size_t n, EnumerationMode mode, const std::function<void(const SimpleGraph&)>& f) {
  if (n > kMaxEnumerationVertices) throw EnumerationError("graph enumeration is limited to 10 vertices");
  if (mode == EnumerationMode::isomorphism_classes) {
    for (const auto& g : isomorphism_classes(n)) f(g);
    return;
  }
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<VertexSet> adj(n);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((mask >> s) & 1U) {
        adj[slots[s].first].insert(slots[s].second);
        adj[slots[s].second].insert(slots[s].first);
      }
    }
    f(SimpleGraph::from_adjacency(names, std::move(adj)));
  }
}

std::optional<std::vector<Vertex>> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                                                    const VertexCompatibility& compatible) {
  const std::size_t n = g.size();
  if (n != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;
  std::vector<Vertex> image(n, 0);
  VertexSet used;
  // Depth-first over g's vertices; a partial map is kept only if it preserves adjacency so far.
  auto extend = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used.contains(w) || g.link(v).size() != h.link(w).size()) continue;
      if (compatible && !compatible(v, w)) continue;
      bool consistent = true;
      for (Vertex u = 0; u < v && consistent; ++u) consistent = g.adjacent(u, v) == h.adjacent(image[u], w);
      if (!consistent) continue;
      image[v] = w;
      used.insert(w);
      if (self(self, v + 1)) return true;
      used.erase(w);
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return image;
}

}  // namespace grprod
