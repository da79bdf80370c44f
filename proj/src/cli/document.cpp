#include <fstream>
#include <set>

#include "grprod/cli.hpp"
#include "grprod/error.hpp"

namespace grprod::cli {

using nlohmann::json;

namespace {

void only_keys(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw InputError("unexpected field '" + key + "' in " + where);
    }
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(where + " needs a '" + key + "' field");
  return obj.at(key);
}

std::int64_t integer_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer()) throw InputError("'" + std::string(key) + "' in " + where + " must be an integer");
  return v.get<std::int64_t>();
}

std::string string_value(const json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where + " must be a string");
  return v.get<std::string>();
}

VertexLabel parse_label(const json& spec, const std::string& where) {
  if (!spec.is_object()) throw InputError(where + " must be an object");
  const std::string kind = string_value(field(spec, "kind", where), "'kind' in " + where);
  const std::string name = spec.contains("name") ? string_value(spec.at("name"), "'name' in " + where) : std::string{};
  if (kind == "cyclic") {
    only_keys(spec, {"kind", "order", "name"}, where);
    return VertexLabel::cyclic(integer_field(spec, "order", where), name);
  }
  if (kind == "free") {
    only_keys(spec, {"kind", "rank", "name"}, where);
    return VertexLabel::free(integer_field(spec, "rank", where), name);
  }
  if (kind == "higman") {
    only_keys(spec, {"kind", "k", "name"}, where);
    return VertexLabel::higman(integer_field(spec, "k", where), name);
  }
  if (kind == "opaque") {
    only_keys(spec, {"kind", "tag", "infinite", "name"}, where);
    std::optional<bool> infinite;
    if (spec.contains("infinite")) {
      if (!spec.at("infinite").is_boolean()) throw InputError("'infinite' in " + where + " must be a boolean");
      infinite = spec.at("infinite").get<bool>();
    }
    return VertexLabel::opaque(string_value(field(spec, "tag", where), "'tag' in " + where), infinite, name);
  }
  throw InputError("unknown label kind '" + kind + "' in " + where);
}

std::pair<std::string, std::string> name_pair(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw InputError(where + " must be a pair of names");
  return {string_value(v[0], where), string_value(v[1], where)};
}

}  // namespace

PresentationPtr parse_presentation(const json& doc) {
  if (!doc.is_object()) throw InputError("presentation document must be a JSON object");
  only_keys(doc, {"graph", "labels"}, "document");
  const json& graph = field(doc, "graph", "document");
  only_keys(graph, {"vertices", "edges"}, "'graph'");
  const json& vertices = field(graph, "vertices", "'graph'");
  if (!vertices.is_array() || vertices.empty()) throw InputError("'graph.vertices' must be a non-empty array");
  std::vector<std::string> names;
  for (const json& v : vertices) names.push_back(string_value(v, "vertex identifier"));
  std::vector<SimpleGraph::Edge> edges;
  if (graph.contains("edges")) {
    if (!graph.at("edges").is_array()) throw InputError("'graph.edges' must be an array");
    for (const json& e : graph.at("edges")) edges.push_back(name_pair(e, "edge"));
  }
  if (names.size() > 64) throw InputError("graphs are limited to 64 vertices");
  SimpleGraph g(names, edges);

  const json& labels = field(doc, "labels", "document");
  if (!labels.is_object()) throw InputError("'labels' must be an object keyed by vertex");
  std::vector<std::optional<VertexLabel>> slots(g.size());
  for (const auto& [vertex, spec] : labels.items()) {
    const auto v = g.find(vertex);
    if (!v) throw InputError("label given for unknown vertex '" + vertex + "'");
    slots[*v] = parse_label(spec, "label of vertex '" + vertex + "'");
  }
  std::vector<VertexLabel> out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!slots[v]) throw InputError("vertex '" + g.name(v) + "' has no label");
    out.push_back(*slots[v]);
  }
  return Presentation::make(std::move(g), std::move(out));
}

PresentationPtr load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return parse_presentation(json::parse(in));
  } catch (const json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

json presentation_to_json(const Presentation& p) {
  const SimpleGraph& g = p.graph();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  json labels = json::object();
  for (Vertex v = 0; v < g.size(); ++v) {
    const VertexLabel& l = p.label(v);
    json spec{{"kind", l.kind_name()}, {"name", l.name()}};
    switch (l.kind()) {
      case LabelKind::cyclic: spec["order"] = l.parameter(); break;
      case LabelKind::free: spec["rank"] = l.parameter(); break;
      case LabelKind::higman: spec["k"] = l.parameter(); break;
      case LabelKind::opaque:
        spec["tag"] = l.tag();
        if (l.infinite()) spec["infinite"] = *l.infinite();
        break;
    }
    labels[g.name(v)] = std::move(spec);
  }
  return json{{"graph", {{"vertices", g.names()}, {"edges", std::move(edges)}}}, {"labels", std::move(labels)}};
}

RelationTable parse_relation_table(const json& doc) {
  if (!doc.is_object()) throw InputError("relation table must be a JSON object");
  only_keys(doc, {"relation", "related", "unrelated"}, "relation table");
  RelationTable t;
  const std::string name = string_value(field(doc, "relation", "relation table"), "'relation'");
  const auto r = relation_from_name(name);
  if (!r) throw InputError("unknown relation '" + name + "'");
  t.relation = *r;
  auto read = [&](const char* key, std::vector<std::pair<std::string, std::string>>& into) {
    if (!doc.contains(key)) return;
    if (!doc.at(key).is_array()) throw InputError(std::string("'") + key + "' must be an array of pairs");
    for (const json& e : doc.at(key)) into.push_back(name_pair(e, std::string("entry of '") + key + "'"));
  };
  read("related", t.related);
  read("unrelated", t.unrelated);
  std::set<std::pair<std::string, std::string>> yes;
  for (const auto& [a, b] : t.related) {
    yes.emplace(a, b);
    yes.emplace(b, a);
  }
  for (const auto& pr : t.unrelated) {
    if (yes.contains(pr)) throw InputError("relation table lists '" + pr.first + "', '" + pr.second + "' both ways");
  }
  return t;
}

std::optional<Judgment> RelationTable::lookup(const VertexLabel& a, const VertexLabel& b) const {
  auto matches = [&](const std::pair<std::string, std::string>& e) {
    return (e.first == a.name() && e.second == b.name()) || (e.first == b.name() && e.second == a.name());
  };
  if (std::any_of(related.begin(), related.end(), matches)) return Judgment::related;
  if (std::any_of(unrelated.begin(), unrelated.end(), matches)) return Judgment::unrelated;
  return std::nullopt;
}

}  // namespace grprod::cli
