#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grprod/parabolic.hpp"

namespace grprod {

struct ComplexOptions {
  /// Radius is measured on canonical conjugators / coset representatives in this metric.
  BallMetric metric = BallMetric::word_length;
  /// Permit infinite vertex groups (the radius then bounds the enumeration).
  bool allow_infinite_labels = false;
  std::size_t max_elements = 2'000'000;
};

/// Finite truncation of the extension graph: conjugates of vertex groups and commutation.
struct ExtensionBall {
  std::size_t radius = 0;
  /// Vertex-type parabolics, sorted by conjugator length, conjugator word, then vertex.
  std::vector<Parabolic> nodes;
  /// Index pairs (i < j), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Whether two distinct vertex-type parabolics commute.
[[nodiscard]] bool vertex_parabolics_commute(const Parabolic& p, const Parabolic& q);

[[nodiscard]] ExtensionBall extension_ball(const PresentationPtr& p, std::size_t radius,
                                           const ComplexOptions& options = {});
/// The sub-ball induced on nodes whose type vertex is untransvectable.
[[nodiscard]] ExtensionBall untransvectable_extension_ball(const PresentationPtr& p, std::size_t radius,
                                                           const ComplexOptions& options = {});

/// A standard clique coset g G_type, with g its shortest representative.
struct CliqueCoset {
  Element representative;
  VertexSet type;

  [[nodiscard]] std::size_t rank() const { return type.size(); }
  friend bool operator==(const CliqueCoset&, const CliqueCoset&) = default;
  friend std::strong_ordering operator<=>(const CliqueCoset& a, const CliqueCoset& b);
};

/// The coset g G_type in canonical form.
[[nodiscard]] CliqueCoset clique_coset(const Element& g, VertexSet type);

/// A cube of the building: the interval between `bottom` and `top` (indices into vertices).
struct Cube {
  std::size_t bottom = 0;
  std::size_t top = 0;
  std::size_t dimension = 0;
  friend auto operator<=>(const Cube&, const Cube&) = default;
};

/// Finite truncation of the right-angled building.
struct BuildingBall {
  std::size_t radius = 0;
  /// Sorted by rank, representative length, representative word, then type.
  std::vector<CliqueCoset> vertices;
  /// (lower, upper) index pairs for rank-one inclusions, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Cubes of dimension at least two, sorted.
  std::vector<Cube> cubes;

  [[nodiscard]] std::size_t count_rank(std::size_t rank) const;
  [[nodiscard]] std::size_t count_cubes(std::size_t dimension) const;
  /// Index of a coset, if present.
  [[nodiscard]] std::optional<std::size_t> find(const CliqueCoset& c) const;
};

[[nodiscard]] BuildingBall building_ball(const PresentationPtr& p, std::size_t radius,
                                         const ComplexOptions& options = {});

/// Per-vertex letter tables for a combined bijection. Letters not listed are fixed,
/// which is only allowed when source and target labels coincide.
using LetterMap = std::map<Letter, Letter>;

/// The bijection between two graph products over the same graph obtained by
/// substituting letters vertex by vertex in normal forms.
class CombinedBijection {
 public:
  /// Throws InputError if the graphs differ, some table is not a bijection, or moves the identity.
  CombinedBijection(PresentationPtr source, PresentationPtr target, std::vector<LetterMap> tables);

  [[nodiscard]] const PresentationPtr& source() const { return source_; }
  [[nodiscard]] const PresentationPtr& target() const { return target_; }

  [[nodiscard]] Letter apply(Vertex v, const Letter& a) const;
  [[nodiscard]] Element apply(const Element& x) const;
  [[nodiscard]] Parabolic apply(const Parabolic& p) const;
  [[nodiscard]] CliqueCoset apply(const CliqueCoset& c) const;
  [[nodiscard]] CombinedBijection inverse() const;

 private:
  PresentationPtr source_;
  PresentationPtr target_;
  std::vector<LetterMap> tables_;
};

/// DOT rendering of the 1-skeleton; `rank` and `type` are node attributes.
[[nodiscard]] std::string to_dot(const BuildingBall& b, const Presentation& p);
[[nodiscard]] std::string to_dot(const ExtensionBall& b, const Presentation& p);

}  // namespace grprod
