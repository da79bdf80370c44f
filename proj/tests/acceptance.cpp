// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "grprod/cli.hpp"
#include "grprod/suites.hpp"

namespace {

using grprod::suites::SuiteResult;
using nlohmann::json;

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome from_suites(std::initializer_list<SuiteResult> results) {
  Outcome o{true, {}};
  for (const SuiteResult& r : results) {
    o.passed = o.passed && r.passed();
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += r.name + ": " + std::to_string(r.checked) + " checks, " + std::to_string(r.failures) + " failures";
    for (const std::string& s : r.samples) o.detail += " [" + s + "]";
  }
  return o;
}

json pentagon(const std::vector<json>& labels) {
  const std::vector<std::string> v{"a", "b", "c", "d", "e"};
  json doc;
  doc["graph"]["vertices"] = v;
  doc["graph"]["edges"] = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) doc["graph"]["edges"].push_back(json::array({v[i], v[(i + 1) % v.size()]}));
  for (std::size_t i = 0; i < v.size(); ++i) doc["labels"][v[i]] = labels[i];
  return doc;
}

Outcome classification_vectors() {
  using namespace grprod::cli;
  const json z{{"kind", "cyclic"}, {"order", 0}};
  const auto f2 = parse_presentation(pentagon({{{"kind", "free"}, {"rank", 2}}, z, z, z, z}));
  const auto f3 = parse_presentation(pentagon({{{"kind", "free"}, {"rank", 3}}, z, z, z, z}));
  const auto hig5 = parse_presentation(pentagon({{{"kind", "higman"}, {"k", 5}}, z, z, z, z}));
  const auto hig10 = parse_presentation(pentagon({{{"kind", "higman"}, {"k", 10}}, z, z, z, z}));

  const RelationTable table = parse_relation_table(
      json{{"relation", "orbit-equivalent"}, {"unrelated", json::array({json::array({"F2", "F3"})})}});
  const Verdict pent = classify(*f2, *f3, table.relation, &table);
  const Verdict same = classify(*f2, *f2, Relation::isomorphic, nullptr);
  const Verdict hig = classify(*hig5, *hig10, Relation::isomorphic, nullptr);

  Outcome o;
  const bool pent_ok = pent.relation_name() == "not-measure-equivalent" && !pent.witness;
  const bool same_ok = same.relation_name() == "isomorphic" && same.witness.has_value() &&
                       same.label_judgments.size() == 5;
  const bool hig_ok = hig.relation_name() == "not-isomorphic";
  o.passed = pent_ok && same_ok && hig_ok;
  o.detail = "F2/F3 pentagon: " + pent.relation_name() + "; identical: " + same.relation_name() +
             "; Hig5/Hig10: " + hig.relation_name();
  return o;
}

}  // namespace

int main() {
  using namespace grprod::suites;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"dichotomy over all graphs on 3-7 vertices", [] { return from_suites({dichotomy(3, 7)}); }},
      {"zoom-in equivalence on 3-7 vertices", [] { return from_suites({zoom_equivalence(3, 7)}); }},
      {"normal-form soundness, Z/2 and Z/3 labels, <= 5 vertices",
       [] { return from_suites({normal_form(NormalFormParams{})}); }},
      {"parabolic oracle, Z/2 labels, conjugators of length <= 3",
       [] { return from_suites({parabolic_oracle(ParabolicParams{})}); }},
      {"length and normal form property, 10^4 triples", [] { return from_suites({length_lemma(10'000, 7)}); }},
      {"building counts", [] { return from_suites({building_counts()}); }},
      {"combined bijections, 10 pairs, R = 3", [] { return from_suites({combined_bijections(10, 3, 11)}); }},
      {"classification vectors", classification_vectors},
  };
  bool all = true;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << index++ << ": " << name << " (" << o.detail << ", "
              << s << " s)" << std::endl;
  }
  return all ? 0 : 1;
}
