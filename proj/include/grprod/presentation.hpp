#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grprod/graph.hpp"

namespace grprod {

/// An element of one vertex group. The identity is the empty letter.
///
/// cyclic(n): a single residue in (-n/2, n/2] (any integer for n = 0).
/// free(r): a freely reduced word over generators +-1 .. +-r.
struct Letter {
  std::vector<std::int64_t> data;

  [[nodiscard]] bool is_identity() const { return data.empty(); }
  static Letter power(std::int64_t e) { return e == 0 ? Letter{} : Letter{{e}}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

enum class LabelKind { cyclic, free, higman, opaque };

/// Descriptor of a vertex group.
class VertexLabel {
 public:
  /// Generator names for free labels, in generator order; uppercase denotes the inverse.
  static constexpr std::string_view kFreeAlphabet = "xyzwabcdefghijklmnopqrstuv";

  /// order 0 is the infinite cyclic group; order 1 is rejected.
  static VertexLabel cyclic(std::int64_t order, std::string name = {});
  static VertexLabel free(std::int64_t rank, std::string name = {});
  static VertexLabel higman(std::int64_t k, std::string name = {});
  /// `infinite` records whether the group is known to be infinite.
  static VertexLabel opaque(std::string tag, std::optional<bool> infinite = std::nullopt, std::string name = {});

  [[nodiscard]] LabelKind kind() const { return kind_; }
  /// Order for cyclic, rank for free, k for higman; 0 for opaque.
  [[nodiscard]] std::int64_t parameter() const { return parameter_; }
  [[nodiscard]] const std::string& tag() const { return tag_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::string kind_name() const;

  /// Element arithmetic is available (cyclic and free only).
  [[nodiscard]] bool arithmetic() const { return kind_ == LabelKind::cyclic || kind_ == LabelKind::free; }
  /// Number of elements when finite.
  [[nodiscard]] std::optional<std::uint64_t> finite_order() const;
  /// Known infiniteness; empty when unknown (opaque without a hint).
  [[nodiscard]] std::optional<bool> infinite() const;

  // Arithmetic. All of these throw UnsupportedLabelError for higman and opaque labels.
  /// Reduces a raw letter to its representative; throws InputError for invalid generators.
  [[nodiscard]] Letter reduce(Letter raw) const;
  [[nodiscard]] Letter multiply(const Letter& a, const Letter& b) const;
  [[nodiscard]] Letter inverse(const Letter& a) const;
  /// Word length in the standard generating set (one generator for cyclic, r for free).
  [[nodiscard]] std::uint64_t length(const Letter& a) const;
  /// Symmetric generating set (without the identity).
  [[nodiscard]] std::vector<Letter> generators() const;
  /// Every non-identity letter; finite labels only.
  [[nodiscard]] std::vector<Letter> non_identity_letters() const;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;

 private:
  VertexLabel(LabelKind kind, std::int64_t parameter, std::string tag, std::optional<bool> infinite, std::string name);
  void require_arithmetic() const;

  LabelKind kind_ = LabelKind::cyclic;
  std::int64_t parameter_ = 0;
  std::string tag_;
  std::optional<bool> opaque_infinite_;
  std::string name_;
};

/// Higman group homomorphisms: a non-trivial homomorphism Hig_from -> Hig_to exists iff to divides from.
[[nodiscard]] bool higman_homomorphism_exists(std::int64_t from_k, std::int64_t to_k);

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

/// A defining graph together with one label per vertex.
class Presentation {
 public:
  /// Throws InputError when the label count does not match the vertex count.
  static PresentationPtr make(SimpleGraph graph, std::vector<VertexLabel> labels);
  /// Every vertex carries the same label.
  static PresentationPtr uniform(SimpleGraph graph, const VertexLabel& label);

  [[nodiscard]] const SimpleGraph& graph() const { return graph_; }
  [[nodiscard]] const VertexLabel& label(Vertex v) const { return labels_.at(v); }
  [[nodiscard]] const std::vector<VertexLabel>& labels() const { return labels_; }
  [[nodiscard]] bool arithmetic() const;
  [[nodiscard]] bool all_finite() const;
  /// Throws UnsupportedLabelError naming the first label without arithmetic.
  void require_arithmetic() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  Presentation(SimpleGraph graph, std::vector<VertexLabel> labels);
  SimpleGraph graph_;
  std::vector<VertexLabel> labels_;
};

}  // namespace grprod
