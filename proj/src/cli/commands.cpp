#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "grprod/cli.hpp"
#include "grprod/complexes.hpp"
#include "grprod/error.hpp"
#include "grprod/recognition.hpp"
#include "grprod/suites.hpp"
#include "grprod/word_syntax.hpp"

namespace grprod::cli {

using nlohmann::json;

namespace {

json names_json(const SimpleGraph& g, VertexSet s) { return json(names_of(g, s)); }

json parabolic_json(const Parabolic& q) {
  return json{{"conjugator", format_element(q.conjugator())},
              {"type_vertices", names_of(q.presentation().graph(), q.type())}};
}

std::string coset_name(const CliqueCoset& c, const SimpleGraph& g) {
  std::string type;
  for (const std::string& n : names_of(g, c.type)) type += (type.empty() ? "" : ",") + n;
  return format_element(c.representative) + " G{" + type + "}";
}

json building_json(const BuildingBall& b, const Presentation& p) {
  const SimpleGraph& g = p.graph();
  json vertices = json::array();
  for (const CliqueCoset& c : b.vertices) {
    vertices.push_back({{"coset", coset_name(c, g)},
                        {"representative", format_element(c.representative)},
                        {"rank", c.rank()},
                        {"type", names_of(g, c.type)}});
  }
  json cubes = json::array();
  for (const Cube& c : b.cubes) cubes.push_back({{"bottom", c.bottom}, {"top", c.top}, {"dimension", c.dimension}});
  return json{{"radius", b.radius}, {"vertices", std::move(vertices)}, {"edges", b.edges}, {"cubes", std::move(cubes)}};
}

json extension_json(const ExtensionBall& b) {
  json nodes = json::array();
  for (const Parabolic& q : b.nodes) nodes.push_back(parabolic_json(q));
  return json{{"radius", b.radius}, {"nodes", std::move(nodes)}, {"edges", b.edges}};
}

json chain_json(const ZoomChain& chain, const SimpleGraph& g) {
  json out = json::array();
  for (VertexSet t : chain.types(g)) out.push_back(names_of(g, t));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct RelationChoice {
  Relation relation = Relation::isomorphic;
  std::optional<RelationTable> table;
};

RelationChoice resolve_relation(const std::string& arg) {
  if (const auto r = relation_from_name(arg)) return {*r, std::nullopt};
  json doc;
  try {
    doc = json::parse(read_file(arg));
  } catch (const json::exception& e) {
    throw InputError("relation table '" + arg + "' is not valid JSON: " + e.what());
  }
  RelationTable t = parse_relation_table(doc);
  return {t.relation, std::move(t)};
}

void emit(const std::string& text, const std::optional<std::string>& path, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path);
  if (!file) throw InputError("cannot write '" + *path + "'");
  file << text;
}

int cmd_analyze(const std::string& input, std::ostream& out) {
  const PresentationPtr p = load_presentation(input);
  out << analyze(*p).dump(2) << '\n';
  return exit_code::ok;
}

int cmd_classify(const std::string& a_path, const std::string& b_path, const std::string& relation, std::ostream& out,
                 std::ostream& err) {
  const PresentationPtr a = load_presentation(a_path);
  const PresentationPtr b = load_presentation(b_path);
  const RelationChoice choice = resolve_relation(relation);
  const Verdict v = classify(*a, *b, choice.relation, choice.table ? &*choice.table : nullptr);
  out << verdict_to_json(v, *a, *b).dump(2) << '\n';
  switch (v.kind) {
    case VerdictKind::positive:
    case VerdictKind::negative: return exit_code::ok;
    case VerdictKind::undetermined: return exit_code::failure;
    case VerdictKind::incomplete:
      err << "error: a label-respecting graph isomorphism exists but some label pairs are neither related nor "
             "unrelated; extend the relation table\n";
      return exit_code::relation;
  }
  return exit_code::failure;
}

int cmd_word(const std::string& input, const std::string& expression, std::ostream& out) {
  const PresentationPtr p = load_presentation(input);
  const Element x = parse_element(p, expression);
  const SimpleGraph& g = p->graph();
  auto syllable_list = [&](const std::vector<Syllable>& s) {
    json arr = json::array();
    for (const Syllable& y : s) arr.push_back(format_syllable(*p, y));
    return arr;
  };
  const json report{{"normal_form", format_element(x)},
                    {"word_length", word_length(x)},
                    {"syllable_count", x.syllable_count()},
                    {"head", syllable_list(head(x))},
                    {"tail", syllable_list(tail(x))},
                    {"syllables", syllable_list(syllables(x))},
                    {"support", names_json(g, x.support())},
                    {"parabolic_support", parabolic_json(parabolic_support(x))}};
  out << report.dump(2) << '\n';
  return exit_code::ok;
}

int cmd_complex(const std::string& kind, const std::string& input, std::size_t radius, const std::string& format,
                const std::optional<std::string>& out_path, std::ostream& out, std::ostream& err) {
  const PresentationPtr p = load_presentation(input);
  ComplexOptions options;
  options.allow_infinite_labels = true;
  std::string text;
  std::string summary;
  if (kind == "building") {
    const BuildingBall b = building_ball(p, radius, options);
    text = format == "dot" ? to_dot(b, *p) : building_json(b, *p).dump(2) + '\n';
    summary = std::to_string(b.vertices.size()) + " vertices, " + std::to_string(b.edges.size()) + " edges, " +
              std::to_string(b.count_cubes(2)) + " squares";
  } else {
    const ExtensionBall b = kind == "extension" ? extension_ball(p, radius, options)
                                                : untransvectable_extension_ball(p, radius, options);
    text = format == "dot" ? to_dot(b, *p) : extension_json(b).dump(2) + '\n';
    summary = std::to_string(b.nodes.size()) + " vertices, " + std::to_string(b.edges.size()) + " edges";
  }
  emit(text, out_path, out);
  (out_path ? out : err) << summary << '\n';
  return exit_code::ok;
}

int cmd_selftest(int max_vertices, std::ostream& out, std::ostream& err) {
  if (max_vertices < 3 || max_vertices > 8) throw InputError("--max-vertices must be between 3 and 8");
  const auto n = static_cast<std::size_t>(max_vertices);
  const auto start = std::chrono::steady_clock::now();
  std::vector<suites::SuiteResult> results;
  results.push_back(suites::dichotomy(3, n));
  results.push_back(suites::zoom_equivalence(3, n));
  results.push_back(suites::normal_form({.max_vertices = std::min<std::size_t>(n, 5),
                                         .triples_per_class = 200,
                                         .swap_sequences_per_class = 50,
                                         .max_word_length = 6,
                                         .seed = 1}));
  results.push_back(
      suites::parabolic_oracle({.max_vertices = std::min<std::size_t>(n, 4), .conjugator_radius = 2, .ball_radius = 3}));
  results.push_back(suites::length_lemma(1000, 1));
  results.push_back(suites::building_counts());
  results.push_back(suites::combined_bijections(3, 2, 1));
  bool ok = true;
  for (const suites::SuiteResult& r : results) {
    ok = ok && r.passed();
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checks, " << r.failures
        << " failures)\n";
    for (const std::string& s : r.samples) out << "  " << s << '\n';
    err << r.name << ": " << r.seconds << " s\n";
  }
  out << "selftest " << (ok ? "passed" : "failed") << '\n';
  err << "total: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  return ok ? exit_code::ok : exit_code::failure;
}

}  // namespace

json analyze(const Presentation& p) {
  const SimpleGraph& g = p.graph();
  const bool exhaustive = g.size() <= kMaxExhaustiveVertices;
  json report;
  report["vertices"] = g.names();
  report["edge_count"] = g.edge_count();
  json labels = json::object();
  for (Vertex v = 0; v < g.size(); ++v) labels[g.name(v)] = p.label(v).name();
  report["labels"] = std::move(labels);

  const bool tf = is_transvection_free(g);
  const bool pc = has_partial_conjugation(g);
  report["transvection_free"] = tf;
  report["partial_conjugation"] = pc;
  const std::optional<bool> sr = exhaustive ? std::optional(is_strongly_reduced(g)) : std::nullopt;
  report["strongly_reduced"] = sr ? json(*sr) : json(nullptr);
  report["clique_reduced"] = exhaustive ? json(is_clique_reduced(g)) : json(nullptr);

  json join = json::array();
  for (VertexSet part : join_decompose(g)) join.push_back(names_of(g, part));
  report["join_decomposition"] = std::move(join);

  std::vector<std::string> notes;
  json untransvectable{{"direct", names_json(g, untransvectable_vertices(g))}};
  if (exhaustive) {
    untransvectable["chains_plain"] = names_json(g, untransvectable_via_chains(g, ChainVariant::plain));
    const bool thick_applies = g.size() >= 2 && sr.value_or(false);
    untransvectable["chains_thick"] =
        thick_applies ? names_json(g, untransvectable_via_chains(g, ChainVariant::thick)) : json(nullptr);

    json products = json::array();
    const PresentationPtr shared = Presentation::make(g, p.labels());
    for (const ProductParabolic& m : maximal_product_parabolics(shared)) {
      json entry = parabolic_json(m.parabolic);
      entry["isolated_clique_type"] = m.isolated_clique_type;
      products.push_back(std::move(entry));
    }
    report["maximal_product_parabolics"] = std::move(products);

    json chains = json::object();
    for (Vertex v = 0; v < g.size(); ++v) {
      if (const auto c = find_zoom_chain(g, v, ChainVariant::plain)) chains[g.name(v)] = chain_json(*c, g);
    }
    report["zoom_chains"] = std::move(chains);
  } else {
    untransvectable["chains_plain"] = nullptr;
    untransvectable["chains_thick"] = nullptr;
    report["maximal_product_parabolics"] = nullptr;
    report["zoom_chains"] = nullptr;
    notes.push_back("exhaustive checks skipped above " + std::to_string(kMaxExhaustiveVertices) + " vertices");
  }
  report["untransvectable"] = std::move(untransvectable);

  std::vector<std::string> failed;
  if (g.size() == 1) failed.push_back("reduced to one vertex");
  if (!tf) failed.push_back("has a transvection");
  if (pc) failed.push_back("has a partial conjugation");
  const bool infinite = std::all_of(p.labels().begin(), p.labels().end(),
                                    [](const VertexLabel& l) { return l.infinite().value_or(false); });
  report["hypotheses"] = json{{"classification", failed.empty()},
                              {"infinite_vertex_groups", infinite},
                              {"failed", failed}};
  if (g.size() == 1) notes.insert(notes.begin(), "reduced to one vertex");
  report["notes"] = notes;
  return report;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph products of groups: normal forms, parabolics, complexes and classification"};
  app.name("grprod");
  app.require_subcommand(1);

  std::string input;
  std::string input_b;
  std::string relation = "isomorphic";
  std::string expression;
  std::string kind;
  std::size_t radius = 2;
  std::string format = "json";
  int max_vertices = 5;
  std::optional<std::string> out_path;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Graph predicates and recognition report");
  analyze_cmd->add_option("--input", input, "Presentation document")->required();

  CLI::App* classify_cmd = app.add_subcommand("classify", "Compare two presentations");
  classify_cmd->add_option("--input", input, "First presentation")->required();
  classify_cmd->add_option("--input-b", input_b, "Second presentation")->required();
  classify_cmd->add_option("--relation", relation, "Relation name or JSON relation table");

  CLI::App* word_cmd = app.add_subcommand("word", "Normal form of a word");
  word_cmd->add_option("--input", input, "Presentation document")->required();
  word_cmd->add_option("expression", expression, "Syllables such as a^2.b^-1")->required();

  CLI::App* complex_cmd = app.add_subcommand("complex", "Emit a truncated complex");
  complex_cmd->add_option("kind", kind, "building, extension or untransvectable-extension")
      ->required()
      ->check(CLI::IsMember({"building", "extension", "untransvectable-extension"}));
  complex_cmd->add_option("--input", input, "Presentation document")->required();
  complex_cmd->add_option("--radius", radius, "Ball radius");
  complex_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  complex_cmd->add_option("--out", out_path, "Output file");

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suites");
  selftest_cmd->add_option("--max-vertices", max_vertices, "Largest graph size, 3 to 8");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::parse;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(input, out);
    if (classify_cmd->parsed()) return cmd_classify(input, input_b, relation, out, err);
    if (word_cmd->parsed()) return cmd_word(input, expression, out);
    if (complex_cmd->parsed()) return cmd_complex(kind, input, radius, format, out_path, out, err);
    if (selftest_cmd->parsed()) return cmd_selftest(max_vertices, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::parse;
  } catch (const RelationTableError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::relation;
  } catch (const UnsupportedLabelError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::label_arithmetic;
  } catch (const EnumerationError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::enumeration;
  }
  return exit_code::parse;
}

}  // namespace grprod::cli
