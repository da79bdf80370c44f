#pragma once

#include <optional>
#include <vector>

#include "grprod/parabolic.hpp"

namespace grprod {

enum class ChainVariant {
  plain,  ///< maximal products, their factors, ending at a clique factor
  thick,  ///< every product is taken inside a thick free factor with non-clique type
};

/// One descent step of a zoom-in chain, at type level.
struct ZoomLevel {
  /// Thick free factor L_j (thick variant only).
  std::optional<VertexSet> thick;
  /// Maximal product P_j.
  VertexSet product;
  /// F_j: a factor of P_j, or its clique factor at the last level.
  VertexSet factor;

  friend bool operator==(const ZoomLevel&, const ZoomLevel&) = default;
};

/// G = F_0 ⊇ (L_1 ⊇) P_1 ⊇ F_1 ⊇ ... ⊇ P_n ⊇ F_n, recorded through standard representatives.
struct ZoomChain {
  ChainVariant variant = ChainVariant::plain;
  std::vector<ZoomLevel> levels;

  /// F_n (the whole vertex set when there are no levels).
  [[nodiscard]] VertexSet last(const SimpleGraph& g) const;
  /// The chain flattened into its successive types, starting with F_0.
  [[nodiscard]] std::vector<VertexSet> types(const SimpleGraph& g) const;
  /// The chain as standard parabolics.
  [[nodiscard]] std::vector<Parabolic> parabolics(const PresentationPtr& p) const;
};

/// A chain ending at G_v, if one exists. The thick variant requires a strongly
/// reduced graph on at least two vertices (InputError otherwise).
[[nodiscard]] std::optional<ZoomChain> find_zoom_chain(const SimpleGraph& g, Vertex v, ChainVariant variant);
[[nodiscard]] std::optional<ZoomChain> find_zoom_chain(const PresentationPtr& p, Vertex v, ChainVariant variant);

/// Vertices admitting a chain.
[[nodiscard]] VertexSet untransvectable_via_chains(const SimpleGraph& g, ChainVariant variant);
[[nodiscard]] VertexSet untransvectable_via_chains(const PresentationPtr& p, ChainVariant variant);

/// Whether `chain` satisfies every condition of its variant in g and ends at `target`.
[[nodiscard]] bool is_valid_chain(const SimpleGraph& g, const ZoomChain& chain, VertexSet target);

/// Type-level normalizer condition on the last factor of a thick chain:
/// every non-empty sub-clique has its normalizer type inside that of the factor.
[[nodiscard]] bool last_factor_normalizer_condition(const SimpleGraph& g, VertexSet factor);

/// Whether a subproduct of type s is special inside the product of type lambda.
[[nodiscard]] bool is_special_subproduct(const SimpleGraph& g, VertexSet lambda, VertexSet s);

/// Type-level product/factor report for one parabolic.
struct QPropertyReport {
  bool maximal_product = false;
  bool isolated_clique_type = false;
  Parabolic clique_factor;
  bool clique_factor_trivial = true;
  /// Special subproducts, smallest type first.
  std::vector<Parabolic> special_subproducts;
  std::vector<Parabolic> cofactors;
  std::vector<Parabolic> factors;
  std::vector<Parabolic> thick_free_factors;
};

[[nodiscard]] QPropertyReport q_property_report(const Parabolic& p);

}  // namespace grprod
