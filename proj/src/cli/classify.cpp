#include "grprod/cli.hpp"
#include "grprod/graph_enum.hpp"
#include "grprod/join.hpp"

namespace grprod::cli {

using nlohmann::json;

namespace {

bool same_group(const VertexLabel& a, const VertexLabel& b) {
  if (a.kind() == LabelKind::opaque || b.kind() == LabelKind::opaque) {
    return a.kind() == b.kind() && a.tag() == b.tag();
  }
  auto infinite_cyclic = [](const VertexLabel& l) {
    return (l.kind() == LabelKind::cyclic && l.parameter() == 0) || (l.kind() == LabelKind::free && l.parameter() == 1);
  };
  if (infinite_cyclic(a) && infinite_cyclic(b)) return true;
  return a.kind() == b.kind() && a.parameter() == b.parameter();
}

bool amenable(const VertexLabel& l) {
  return l.kind() == LabelKind::cyclic || (l.kind() == LabelKind::free && l.parameter() == 1);
}

struct GraphFacts {
  bool one_vertex;
  bool transvection_free;
  bool partial_conjugation;
  std::optional<bool> strongly_reduced;
  std::optional<bool> join_of_strongly_reduced;
  bool infinite_labels;
};

GraphFacts facts_of(const Presentation& p) {
  const SimpleGraph& g = p.graph();
  GraphFacts f{};
  f.one_vertex = g.size() == 1;
  f.transvection_free = is_transvection_free(g);
  f.partial_conjugation = has_partial_conjugation(g);
  if (g.size() <= kMaxExhaustiveVertices) {
    f.strongly_reduced = is_strongly_reduced(g);
    bool all = true;
    for (VertexSet part : join_decompose(g)) {
      const SimpleGraph h = g.induced(part);
      all = all && h.size() >= 2 && is_strongly_reduced(h);
    }
    f.join_of_strongly_reduced = all;
  }
  f.infinite_labels = std::all_of(p.labels().begin(), p.labels().end(),
                                  [](const VertexLabel& l) { return l.infinite().value_or(false); });
  return f;
}

json facts_json(const GraphFacts& f) {
  auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  return json{{"one_vertex", f.one_vertex},
              {"transvection_free", f.transvection_free},
              {"partial_conjugation", f.partial_conjugation},
              {"strongly_reduced", opt(f.strongly_reduced)},
              {"join_of_strongly_reduced", opt(f.join_of_strongly_reduced)},
              {"infinite_labels", f.infinite_labels}};
}

std::string judgment_name(Judgment j) {
  switch (j) {
    case Judgment::related: return "related";
    case Judgment::unrelated: return "unrelated";
    case Judgment::unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace

std::optional<Relation> relation_from_name(std::string_view name) {
  if (name == "isomorphic" || name == "iso" || name == "isomorphism") return Relation::isomorphic;
  if (name == "strongly-commensurable" || name == "strong-commensurable" || name == "sc" ||
      name == "strong-commensurability") {
    return Relation::strongly_commensurable;
  }
  if (name == "orbit-equivalent" || name == "oe" || name == "orbit-equivalence") return Relation::orbit_equivalent;
  return std::nullopt;
}

std::string positive_name(Relation r) {
  switch (r) {
    case Relation::isomorphic: return "isomorphic";
    case Relation::strongly_commensurable: return "strongly-commensurable";
    case Relation::orbit_equivalent: return "orbit-equivalent";
  }
  return "undetermined";
}

std::string negative_name(Relation r) {
  switch (r) {
    case Relation::isomorphic: return "not-isomorphic";
    case Relation::strongly_commensurable: return "not-commensurable";
    case Relation::orbit_equivalent: return "not-measure-equivalent";
  }
  return "undetermined";
}

std::string Verdict::relation_name() const {
  switch (kind) {
    case VerdictKind::positive: return positive_name(relation);
    case VerdictKind::negative: return negative_name(relation);
    case VerdictKind::undetermined:
    case VerdictKind::incomplete: return "undetermined";
  }
  return "undetermined";
}

Judgment builtin_judgment(Relation r, const VertexLabel& a, const VertexLabel& b) {
  if (same_group(a, b)) return Judgment::related;
  if (a.kind() == LabelKind::opaque || b.kind() == LabelKind::opaque) return Judgment::unknown;
  const auto fa = a.finite_order();
  const auto fb = b.finite_order();
  // Finite against infinite, or finite groups of different orders.
  if (fa.has_value() != fb.has_value()) return Judgment::unrelated;
  if (fa && fb) return *fa == *fb ? Judgment::related : Judgment::unrelated;
  const bool ha = a.kind() == LabelKind::higman;
  const bool hb = b.kind() == LabelKind::higman;
  if (ha && hb) {
    // Distinct parameters: the groups are not isomorphic, and having no proper finite-index
    // subgroups they are not strongly commensurable either. Orbit equivalence is left open.
    return r == Relation::orbit_equivalent ? Judgment::unknown : Judgment::unrelated;
  }
  if (ha || hb) {
    if (r != Relation::orbit_equivalent) return Judgment::unrelated;
    // Amenability is an orbit-equivalence invariant; Higman groups contain free subgroups.
    const VertexLabel& other = ha ? b : a;
    return amenable(other) ? Judgment::unrelated : Judgment::unknown;
  }
  // Infinite cyclic and free groups of different ranks. Finite-index subgroups of F_r of index i
  // have rank i(r-1)+1, and the first L2-Betti number separates them up to orbit equivalence.
  return Judgment::unrelated;
}

HypothesesReport check_hypotheses(Relation r, const Presentation& a, const Presentation& b) {
  const GraphFacts fa = facts_of(a);
  const GraphFacts fb = facts_of(b);
  HypothesesReport h;
  h.details = json{{"a", facts_json(fa)}, {"b", facts_json(fb)}};

  auto general = [&](std::vector<std::string>& failed, bool need_infinite) {
    for (const auto& [tag, f] : {std::pair{"A", &fa}, std::pair{"B", &fb}}) {
      const std::string g = std::string("graph ") + tag;
      if (f->one_vertex) failed.push_back(g + " is reduced to one vertex");
      if (!f->transvection_free) failed.push_back(g + " has a transvection");
      if (f->partial_conjugation) failed.push_back(g + " has a partial conjugation");
      if (need_infinite && !f->infinite_labels) failed.push_back(g + " has vertex groups not known to be infinite");
    }
  };

  std::vector<std::string> failed;
  general(failed, r != Relation::isomorphic);
  if (failed.empty()) {
    h.satisfied = true;
    h.criterion = r == Relation::isomorphic ? "transvection-free, no partial conjugation, more than one vertex"
                                            : "transvection-free, no partial conjugation, more than one vertex, "
                                              "infinite vertex groups";
    return h;
  }
  if (r == Relation::isomorphic) {
    // Either side may play the transvection-free role, since isomorphism is symmetric.
    const bool one_tf = fa.transvection_free || fb.transvection_free;
    const bool several = !fa.one_vertex && !fb.one_vertex;
    if (several && one_tf && fa.strongly_reduced.value_or(false) && fb.strongly_reduced.value_or(false)) {
      h.satisfied = true;
      h.criterion = "strongly reduced, more than one vertex, one graph transvection-free";
      return h;
    }
    if (one_tf && fa.join_of_strongly_reduced.value_or(false) && fb.join_of_strongly_reduced.value_or(false)) {
      h.satisfied = true;
      h.criterion = "joins of strongly reduced graphs, one graph transvection-free";
      return h;
    }
    if (!(fa.strongly_reduced && fb.strongly_reduced)) failed.push_back("exhaustive checks skipped above 12 vertices");
  }
  h.failed = std::move(failed);
  return h;
}

Verdict classify(const Presentation& a, const Presentation& b, Relation r, const RelationTable* table) {
  const SimpleGraph& ga = a.graph();
  const SimpleGraph& gb = b.graph();
  std::vector<std::vector<std::pair<Judgment, std::string>>> matrix(ga.size());
  for (Vertex v = 0; v < ga.size(); ++v) {
    for (Vertex w = 0; w < gb.size(); ++w) {
      std::optional<Judgment> j;
      if (table) j = table->lookup(a.label(v), b.label(w));
      matrix[v].emplace_back(j ? *j : builtin_judgment(r, a.label(v), b.label(w)), j ? "table" : "built-in");
    }
  }
  Verdict out;
  out.relation = r;
  out.hypotheses = check_hypotheses(r, a, b);

  auto judgments_for = [&](const std::vector<Vertex>& sigma) {
    std::vector<LabelJudgment> js;
    for (Vertex v = 0; v < sigma.size(); ++v) {
      js.push_back(LabelJudgment{v, sigma[v], matrix[v][sigma[v]].first, matrix[v][sigma[v]].second});
    }
    return js;
  };

  if (ga.size() == gb.size() && ga.edge_count() == gb.edge_count()) {
    auto sigma = find_isomorphism(ga, gb, [&](Vertex v, Vertex w) { return matrix[v][w].first == Judgment::related; });
    if (sigma) {
      out.kind = VerdictKind::positive;
      out.label_judgments = judgments_for(*sigma);
      out.witness = std::move(sigma);
      return out;
    }
    sigma = find_isomorphism(ga, gb, [&](Vertex v, Vertex w) { return matrix[v][w].first != Judgment::unrelated; });
    if (sigma) {
      out.kind = VerdictKind::incomplete;
      out.label_judgments = judgments_for(*sigma);
      out.witness = std::move(sigma);
      return out;
    }
  }
  out.kind = out.hypotheses.satisfied ? VerdictKind::negative : VerdictKind::undetermined;
  return out;
}

json verdict_to_json(const Verdict& v, const Presentation& a, const Presentation& b) {
  json out{{"relation", v.relation_name()}, {"requested", positive_name(v.relation)}};
  if (v.witness) {
    json sigma = json::object();
    for (Vertex x = 0; x < v.witness->size(); ++x) sigma[a.graph().name(x)] = b.graph().name((*v.witness)[x]);
    out[v.kind == VerdictKind::incomplete ? "candidate" : "witness"] = std::move(sigma);
    json labels = json::array();
    for (const LabelJudgment& j : v.label_judgments) {
      labels.push_back({{"vertex", a.graph().name(j.vertex)},
                        {"image", b.graph().name(j.image)},
                        {"label", a.label(j.vertex).name()},
                        {"image_label", b.label(j.image).name()},
                        {"judgment", judgment_name(j.judgment)},
                        {"source", j.source}});
    }
    out["label_judgments"] = std::move(labels);
  } else {
    out["witness"] = nullptr;
  }
  if (v.kind == VerdictKind::incomplete) {
    std::vector<std::string> missing;
    for (const LabelJudgment& j : v.label_judgments) {
      if (j.judgment == Judgment::unknown) missing.push_back(a.label(j.vertex).name() + " ~ " + b.label(j.image).name());
    }
    out["missing_relations"] = missing;
  }
  out["hypotheses"] = json{{"satisfied", v.hypotheses.satisfied},
                           {"criterion", v.hypotheses.criterion.empty() ? json(nullptr) : json(v.hypotheses.criterion)},
                           {"failed", v.hypotheses.failed},
                           {"graphs", v.hypotheses.details}};
  return out;
}

}  // namespace grprod::cli
