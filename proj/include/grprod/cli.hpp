#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "grprod/presentation.hpp"

namespace grprod::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;  ///< suite failure or undetermined verdict
inline constexpr int parse = 2;
inline constexpr int relation = 3;
inline constexpr int label_arithmetic = 4;
inline constexpr int enumeration = 5;
}  // namespace exit_code

/// Parses {"graph":{"vertices":[...],"edges":[[u,v],...]},"labels":{v:{"kind":...},...}}.
/// Throws InputError on any malformed or incomplete document.
[[nodiscard]] PresentationPtr parse_presentation(const nlohmann::json& doc);
[[nodiscard]] PresentationPtr load_presentation(const std::string& path);
[[nodiscard]] nlohmann::json presentation_to_json(const Presentation& p);

enum class Relation { isomorphic, strongly_commensurable, orbit_equivalent };

/// Accepts the canonical names and a few aliases ("iso", "sc", "oe", ...).
[[nodiscard]] std::optional<Relation> relation_from_name(std::string_view name);
[[nodiscard]] std::string positive_name(Relation r);
[[nodiscard]] std::string negative_name(Relation r);

enum class Judgment { related, unrelated, unknown };

/// Judgments the tool can make on its own.
[[nodiscard]] Judgment builtin_judgment(Relation r, const VertexLabel& a, const VertexLabel& b);

/// User-supplied label pairs, matched by display name in either order.
struct RelationTable {
  Relation relation = Relation::isomorphic;
  std::vector<std::pair<std::string, std::string>> related;
  std::vector<std::pair<std::string, std::string>> unrelated;

  [[nodiscard]] std::optional<Judgment> lookup(const VertexLabel& a, const VertexLabel& b) const;
};

/// {"relation": name, "related": [[a,b],...], "unrelated": [[a,b],...]}; throws InputError.
[[nodiscard]] RelationTable parse_relation_table(const nlohmann::json& doc);

struct LabelJudgment {
  Vertex vertex = 0;
  Vertex image = 0;
  Judgment judgment = Judgment::unknown;
  std::string source;  ///< "table" or "built-in"
};

struct HypothesesReport {
  bool satisfied = false;
  /// Name of the criterion that held, when one did.
  std::string criterion;
  std::vector<std::string> failed;
  nlohmann::json details;
};

enum class VerdictKind { positive, negative, undetermined, incomplete };

struct Verdict {
  Relation relation = Relation::isomorphic;
  VerdictKind kind = VerdictKind::undetermined;
  /// sigma as image[v]; present for positive verdicts, and for incomplete ones (the candidate).
  std::optional<std::vector<Vertex>> witness;
  std::vector<LabelJudgment> label_judgments;
  HypothesesReport hypotheses;

  /// The relation string ("isomorphic", "not-isomorphic", ..., "undetermined").
  [[nodiscard]] std::string relation_name() const;
};

[[nodiscard]] HypothesesReport check_hypotheses(Relation r, const Presentation& a, const Presentation& b);

/// Searches label-respecting graph isomorphisms; `table` may be null.
[[nodiscard]] Verdict classify(const Presentation& a, const Presentation& b, Relation r, const RelationTable* table);
[[nodiscard]] nlohmann::json verdict_to_json(const Verdict& v, const Presentation& a, const Presentation& b);

[[nodiscard]] nlohmann::json analyze(const Presentation& p);

/// Runs the command line (without the program name); returns the exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace grprod::cli
