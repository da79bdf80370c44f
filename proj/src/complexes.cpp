#include "grprod/complexes.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "grprod/error.hpp"
#include "grprod/word_syntax.hpp"

namespace grprod {

namespace {

BallOptions ball_options(const ComplexOptions& o) { return BallOptions{o.metric, o.allow_infinite_labels, o.max_elements}; }

// Output order for building vertices.
bool building_less(const CliqueCoset& a, const CliqueCoset& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  const auto la = a.representative.syllable_count();
  const auto lb = b.representative.syllable_count();
  if (la != lb) return la < lb;
  if (auto c = a.representative <=> b.representative; c != 0) return c < 0;
  return a.type < b.type;
}

std::string type_names(const Presentation& p, VertexSet s) {
  std::string out;
  for (const auto& n : names_of(p.graph(), s)) {
    if (!out.empty()) out += ',';
    out += n;
  }
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

bool vertex_parabolics_commute(const Parabolic& p, const Parabolic& q) {
  require_same_presentation(p.conjugator(), q.conjugator());
  if (p.type().size() != 1 || q.type().size() != 1) throw InputError("expected vertex-type parabolics");
  const SimpleGraph& g = p.presentation().graph();
  const Vertex v = p.type().front();
  const Vertex w = q.type().front();
  if (p == q || !g.adjacent(v, w)) return false;
  // Need k in p.conj G_star(v) ∩ q.conj G_star(w), i.e. p.conj^-1 q.conj in G_star(v) G_star(w).
  const Element x = multiply(invert(p.conjugator()), q.conjugator());
  return in_standard_product(x, g.star(v), g.star(w));
}

ExtensionBall extension_ball(const PresentationPtr& p, std::size_t radius, const ComplexOptions& options) {
  const auto elements = ball(p, radius, ball_options(options));
  std::set<Parabolic> found;
  for (const Element& g : elements) {
    for (Vertex v = 0; v < p->graph().size(); ++v) found.insert(Parabolic::canonical(g, VertexSet::single(v)));
  }
  ExtensionBall out;
  out.radius = radius;
  out.nodes.assign(found.begin(), found.end());
  std::sort(out.nodes.begin(), out.nodes.end(), [&](const Parabolic& a, const Parabolic& b) {
    const auto la = metric_length(a.conjugator(), options.metric);
    const auto lb = metric_length(b.conjugator(), options.metric);
    if (la != lb) return la < lb;
    if (auto c = a.conjugator() <=> b.conjugator(); c != 0) return c < 0;
    return a.type() < b.type();
  });
  const SimpleGraph& g = p->graph();
  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < out.nodes.size(); ++j) {
      if (!g.adjacent(out.nodes[i].type().front(), out.nodes[j].type().front())) continue;
      if (vertex_parabolics_commute(out.nodes[i], out.nodes[j])) out.edges.emplace_back(i, j);
    }
  }
  return out;
}

ExtensionBall untransvectable_extension_ball(const PresentationPtr& p, std::size_t radius,
                                             const ComplexOptions& options) {
  const ExtensionBall full = extension_ball(p, radius, options);
  const VertexSet keep = untransvectable_vertices(p->graph());
  ExtensionBall out;
  out.radius = radius;
  std::vector<std::size_t> new_index(full.nodes.size(), full.nodes.size());
  for (std::size_t i = 0; i < full.nodes.size(); ++i) {
    if (keep.contains(full.nodes[i].type().front())) {
      new_index[i] = out.nodes.size();
      out.nodes.push_back(full.nodes[i]);
    }
  }
  for (auto [i, j] : full.edges) {
    if (new_index[i] != full.nodes.size() && new_index[j] != full.nodes.size()) {
      out.edges.emplace_back(new_index[i], new_index[j]);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const CliqueCoset& a, const CliqueCoset& b) {
  if (auto c = a.type <=> b.type; c != 0) return c;
  return a.representative <=> b.representative;
}

CliqueCoset clique_coset(const Element& g, VertexSet type) {
  const SimpleGraph& graph = g.presentation().graph();
  graph.check_subset(type);
  if (!graph.is_clique(type)) throw InputError("clique cosets need a clique type");
  return CliqueCoset{strip_tail(g, type), type};
}

std::size_t BuildingBall::count_rank(std::size_t rank) const {
  return static_cast<std::size_t>(
      std::count_if(vertices.begin(), vertices.end(), [rank](const CliqueCoset& c) { return c.rank() == rank; }));
}

std::size_t BuildingBall::count_cubes(std::size_t dimension) const {
  if (dimension == 0) return vertices.size();
  if (dimension == 1) return edges.size();
  return static_cast<std::size_t>(
      std::count_if(cubes.begin(), cubes.end(), [dimension](const Cube& c) { return c.dimension == dimension; }));
}

std::optional<std::size_t> BuildingBall::find(const CliqueCoset& c) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), c, building_less);
  if (it == vertices.end() || !(*it == c)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

BuildingBall building_ball(const PresentationPtr& p, std::size_t radius, const ComplexOptions& options) {
  const auto elements = ball(p, radius, ball_options(options));
  const auto all_cliques = cliques(p->graph());
  std::set<CliqueCoset> found;
  for (const Element& g : elements) {
    for (VertexSet c : all_cliques) found.insert(clique_coset(g, c));
  }
  BuildingBall out;
  out.radius = radius;
  out.vertices.assign(found.begin(), found.end());
  std::sort(out.vertices.begin(), out.vertices.end(), building_less);
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    const CliqueCoset& low = out.vertices[i];
    for (VertexSet c : all_cliques) {
      if (!low.type.proper_subset_of(c)) continue;
      const auto j = out.find(clique_coset(low.representative, c));
      if (!j) throw EnumerationError("building ball is not closed under cofaces");
      const std::size_t dim = c.size() - low.rank();
      if (dim == 1) {
        out.edges.emplace_back(i, *j);
      } else {
        out.cubes.push_back(Cube{i, *j, dim});
      }
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  std::sort(out.cubes.begin(), out.cubes.end());
  return out;
}

CombinedBijection::CombinedBijection(PresentationPtr source, PresentationPtr target, std::vector<LetterMap> tables)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!(source_->graph() == target_->graph())) throw InputError("combined bijection needs the same graph on both sides");
  const std::size_t n = source_->graph().size();
  if (tables.size() != n) throw InputError("combined bijection needs one letter table per vertex");
  source_->require_arithmetic();
  target_->require_arithmetic();
  tables_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const VertexLabel& from = source_->label(v);
    const VertexLabel& to = target_->label(v);
    const std::string where = " at vertex '" + source_->graph().name(v) + "'";
    std::set<Letter> images;
    for (const auto& [raw_key, raw_value] : tables[v]) {
      Letter key = from.reduce(raw_key);
      Letter value = to.reduce(raw_value);
      if (key.is_identity() != value.is_identity()) throw InputError("letter bijection must fix the identity" + where);
      if (key.is_identity()) continue;
      if (!images.insert(value).second) throw InputError("letter table is not injective" + where);
      if (!tables_[v].emplace(std::move(key), std::move(value)).second) {
        throw InputError("letter table lists a letter twice" + where);
      }
    }
    if (from.finite_order() != to.finite_order()) throw InputError("vertex groups are not equinumerous" + where);
    if (from.finite_order()) {
      if (tables_[v].empty() && from == to) continue;  // identity on the vertex group
      if (tables_[v].size() + 1 != *from.finite_order()) throw InputError("letter table is not total" + where);
    } else if (from == to) {
      // Unlisted letters are fixed, so the listed ones must be permuted among themselves.
      std::set<Letter> keys;
      for (const auto& [k, val] : tables_[v]) keys.insert(k);
      if (keys != images) throw InputError("letter table must permute its listed letters" + where);
    }
  }
}

Letter CombinedBijection::apply(Vertex v, const Letter& a) const {
  const Letter key = source_->label(v).reduce(a);
  if (key.is_identity()) return key;
  const auto it = tables_.at(v).find(key);
  if (it != tables_[v].end()) return it->second;
  if (source_->label(v) == target_->label(v)) return key;
  throw InputError("letter outside the bijection's table at vertex '" + source_->graph().name(v) + "'");
}

Element CombinedBijection::apply(const Element& x) const {
  if (!(x.presentation() == *source_)) throw PresentationMismatchError("element is not over the source presentation");
  std::vector<Syllable> word;
  word.reserve(x.syllable_count());
  for (const Syllable& s : x.word()) word.push_back(Syllable{s.vertex, apply(s.vertex, s.letter)});
  return Element::normalize(target_, word);
}

Parabolic CombinedBijection::apply(const Parabolic& p) const {
  return Parabolic::canonical(apply(p.conjugator()), p.type());
}

CliqueCoset CombinedBijection::apply(const CliqueCoset& c) const { return clique_coset(apply(c.representative), c.type); }

CombinedBijection CombinedBijection::inverse() const {
  std::vector<LetterMap> inv(tables_.size());
  for (std::size_t v = 0; v < tables_.size(); ++v) {
    for (const auto& [k, val] : tables_[v]) inv[v].emplace(val, k);
  }
  return CombinedBijection(target_, source_, std::move(inv));
}

std::string to_dot(const BuildingBall& b, const Presentation& p) {
  std::ostringstream os;
  os << "graph building {\n";
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    const CliqueCoset& c = b.vertices[i];
    const std::string label = format_element(c.representative) + " G{" + type_names(p, c.type) + "}";
    os << "  v" << i << " [label=" << quoted(label) << ", rank=" << c.rank() << ", type=" << quoted(type_names(p, c.type))
       << "];\n";
  }
  for (auto [i, j] : b.edges) os << "  v" << i << " -- v" << j << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const ExtensionBall& b, const Presentation& p) {
  std::ostringstream os;
  os << "graph extension {\n";
  for (std::size_t i = 0; i < b.nodes.size(); ++i) {
    const Parabolic& n = b.nodes[i];
    const std::string label = format_element(n.conjugator()) + " G{" + type_names(p, n.type()) + "}";
    os << "  v" << i << " [label=" << quoted(label) << ", type=" << quoted(type_names(p, n.type())) << "];\n";
  }
  for (auto [i, j] : b.edges) os << "  v" << i << " -- v" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace grprod
