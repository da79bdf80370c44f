#include "grprod/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "grprod/error.hpp"

namespace grprod {

namespace {

void check_capacity(std::size_t n) {
  if (n > VertexSet::kCapacity) {
    throw InputError("graphs are limited to " + std::to_string(VertexSet::kCapacity) + " vertices");
  }
}

void check_exhaustive(const SimpleGraph& g, const char* what) {
  if (g.size() > kMaxExhaustiveVertices) {
    throw EnumerationError(std::string(what) + " scans all vertex subsets and is limited to " +
                           std::to_string(kMaxExhaustiveVertices) + " vertices");
  }
}

// Flood fill inside `s` using the neighbourhood function `nbr`.
template <typename Nbr>
std::vector<VertexSet> flood_components(VertexSet s, Nbr&& nbr) {
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= nbr(v) & s;
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

}  // namespace

SimpleGraph::SimpleGraph(std::vector<std::string> names, std::span<const Edge> edges) : names_(std::move(names)) {
  check_capacity(names_.size());
  std::unordered_map<std::string, Vertex> index;
  for (Vertex v = 0; v < names_.size(); ++v) {
    if (!index.emplace(names_[v], v).second) throw InputError("duplicate vertex '" + names_[v] + "'");
  }
  adjacency_.assign(names_.size(), VertexSet{});
  for (const auto& [a, b] : edges) {
    const auto ia = index.find(a);
    const auto ib = index.find(b);
    if (ia == index.end()) throw InputError("edge endpoint '" + a + "' is not a vertex");
    if (ib == index.end()) throw InputError("edge endpoint '" + b + "' is not a vertex");
    if (ia->second == ib->second) throw InputError("loop at vertex '" + a + "'");
    if (adjacency_[ia->second].contains(ib->second)) throw InputError("duplicate edge " + a + "-" + b);
    adjacency_[ia->second].insert(ib->second);
    adjacency_[ib->second].insert(ia->second);
  }
}

SimpleGraph SimpleGraph::from_adjacency(std::vector<std::string> names, std::vector<VertexSet> adjacency) {
  check_capacity(names.size());
  if (adjacency.size() != names.size()) throw InputError("adjacency table size mismatch");
  const VertexSet all = VertexSet::first_n(names.size());
  for (Vertex v = 0; v < names.size(); ++v) {
    if (adjacency[v].contains(v)) throw InputError("loop in adjacency table");
    if (!adjacency[v].subset_of(all)) throw InputError("adjacency refers to an unknown vertex");
    for (Vertex w : adjacency[v]) {
      if (!adjacency[w].contains(v)) throw InputError("adjacency table is not symmetric");
    }
  }
  SimpleGraph g;
  g.names_ = std::move(names);
  g.adjacency_ = std::move(adjacency);
  return g;
}

SimpleGraph SimpleGraph::from_index_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  check_capacity(n);
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<VertexSet> adj(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw InputError("edge index out of range");
    if (u == v) throw InputError("loop in edge list");
    adj[u].insert(v);
    adj[v].insert(u);
  }
  return from_adjacency(std::move(names), std::move(adj));
}

std::optional<Vertex> SimpleGraph::find(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Vertex>(it - names_.begin());
}

Vertex SimpleGraph::index_of(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

void SimpleGraph::check_vertex(Vertex v) const {
  if (v >= size()) throw InputError("vertex index " + std::to_string(v) + " out of range");
}

void SimpleGraph::check_subset(VertexSet s) const {
  if (!s.subset_of(vertices())) throw InputError("vertex subset refers to unknown vertices");
}

VertexSet SimpleGraph::orthogonal(VertexSet lambda) const {
  check_subset(lambda);
  VertexSet out = vertices() - lambda;
  for (Vertex v : lambda) out &= adjacency_[v];
  return out;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adjacency_) twice += a.size();
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool SimpleGraph::is_clique(VertexSet s) const {
  for (Vertex v : s) {
    if (!(s.without(v)).subset_of(adjacency_[v])) return false;
  }
  return true;
}

bool SimpleGraph::is_connected(VertexSet s) const { return components(s).size() <= 1; }

std::vector<VertexSet> SimpleGraph::components(VertexSet s) const {
  return flood_components(s, [this](Vertex v) { return adjacency_[v]; });
}

std::vector<VertexSet> SimpleGraph::complement_components(VertexSet s) const {
  const VertexSet all = vertices();
  return flood_components(s, [this, all](Vertex v) { return (all - adjacency_[v]).without(v); });
}

SimpleGraph SimpleGraph::induced(VertexSet s) const {
  check_subset(s);
  std::vector<Vertex> order(s.begin(), s.end());
  return permuted(order);
}

SimpleGraph SimpleGraph::permuted(std::span<const Vertex> order) const {
  std::vector<std::string> names;
  std::vector<Vertex> position(size(), VertexSet::kCapacity);
  for (std::size_t i = 0; i < order.size(); ++i) {
    check_vertex(order[i]);
    names.push_back(names_[order[i]]);
    position[order[i]] = i;
  }
  std::vector<VertexSet> adj(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : adjacency_[order[i]]) {
      if (position[w] != VertexSet::kCapacity) adj[i].insert(position[w]);
    }
  }
  return from_adjacency(std::move(names), std::move(adj));
}

bool is_transvection_free(const SimpleGraph& g) {
  for (Vertex v = 0; v < g.size(); ++v) {
    for (Vertex w = 0; w < g.size(); ++w) {
      if (v != w && g.link(v).subset_of(g.star(w))) return false;
    }
  }
  return true;
}

bool has_partial_conjugation(const SimpleGraph& g) {
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!g.is_connected(g.vertices() - g.star(v))) return true;
  }
  return false;
}

bool is_collapsible(const SimpleGraph& g, VertexSet lambda) {
  g.check_subset(lambda);
  if (lambda.empty()) return true;
  const VertexSet outside = g.vertices() - lambda;
  const VertexSet reference = g.link(lambda.front()) & outside;
  for (Vertex x : lambda) {
    if ((g.link(x) & outside) != reference) return false;
  }
  return true;
}

bool is_strongly_reduced(const SimpleGraph& g) {
  check_exhaustive(g, "is_strongly_reduced");
  const VertexSet all = g.vertices();
  bool reduced = true;
  for_each_subset(all, [&](VertexSet s) {
    if (reduced && s.size() >= 2 && s != all && is_collapsible(g, s)) reduced = false;
  });
  return reduced;
}

std::vector<VertexSet> join_decompose(const SimpleGraph& g) {
  if (g.size() == 0) throw InputError("join decomposition of the empty graph");
  return g.complement_components(g.vertices());
}

VertexSet untransvectable_vertices(const SimpleGraph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.size(); ++v) {
    bool free = true;
    for (Vertex w = 0; w < g.size() && free; ++w) {
      if (w != v && g.link(v).subset_of(g.star(w))) free = false;
    }
    if (free) out.insert(v);
  }
  return out;
}

bool is_clique_reduced(const SimpleGraph& g) {
  for (Vertex v = 0; v < g.size(); ++v) {
    for (Vertex w = v + 1; w < g.size(); ++w) {
      if (g.star(v) == g.star(w)) return false;
    }
  }
  return true;
}

std::vector<VertexSet> cliques(const SimpleGraph& g) {
  std::vector<VertexSet> out{VertexSet{}};
  // Extend each clique only by vertices larger than its maximum so each appears once.
  for (std::size_t i = 0; i < out.size(); ++i) {
    const VertexSet c = out[i];
    VertexSet candidates = g.vertices();
    for (Vertex v : c) candidates &= g.link(v);
    for (Vertex v : candidates) {
      if (c.empty() || v > static_cast<Vertex>(63 - std::countl_zero(c.bits()))) out.push_back(c.with(v));
    }
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  return out;
}

namespace {
std::string dot_id(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}
}  // namespace

std::string to_dot(const SimpleGraph& g, std::string_view graph_name) {
  std::ostringstream os;
  os << "graph " << dot_id(graph_name) << " {\n";
  for (Vertex v = 0; v < g.size(); ++v) os << "  " << dot_id(g.name(v)) << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << dot_id(g.name(u)) << " -- " << dot_id(g.name(v)) << ";\n";
  os << "}\n";
  return os.str();
}

std::vector<std::string> names_of(const SimpleGraph& g, VertexSet s) {
  std::vector<std::string> out;
  for (Vertex v : s) out.push_back(g.name(v));
  return out;
}

VertexSet subset_of_names(const SimpleGraph& g, std::span<const std::string> names) {
  VertexSet s;
  for (const auto& n : names) s.insert(g.index_of(n));
  return s;
}

}  // namespace grprod
