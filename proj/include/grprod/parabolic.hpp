#pragma once

#include <vector>

#include "grprod/element.hpp"

namespace grprod {

/// A parabolic subgroup g G_type g^-1 in canonical form.
///
/// The conjugator is the shortest element of g G_{type ∪ type⊥}; two
/// parabolics are equal as subgroups exactly when their canonical pairs agree.
class Parabolic {
 public:
  /// Canonical form of g G_lambda g^-1.
  static Parabolic canonical(const Element& g, VertexSet lambda);
  /// The standard parabolic G_lambda.
  static Parabolic standard(const PresentationPtr& p, VertexSet lambda);

  [[nodiscard]] const Element& conjugator() const { return conjugator_; }
  [[nodiscard]] VertexSet type() const { return type_; }
  [[nodiscard]] const Presentation& presentation() const { return conjugator_.presentation(); }
  [[nodiscard]] const PresentationPtr& presentation_ptr() const { return conjugator_.presentation_ptr(); }
  [[nodiscard]] bool is_trivial() const { return type_.empty(); }

  friend bool operator==(const Parabolic&, const Parabolic&) = default;
  friend std::strong_ordering operator<=>(const Parabolic& a, const Parabolic& b);

 private:
  Parabolic(Element conjugator, VertexSet type) : conjugator_(std::move(conjugator)), type_(type) {}
  Element conjugator_;
  VertexSet type_;
};

inline Parabolic canonicalize(const Element& g, VertexSet lambda) { return Parabolic::canonical(g, lambda); }

/// Splits g = d * b with b in G_theta and d the shortest element of g G_theta.
[[nodiscard]] Element strip_tail(const Element& g, VertexSet theta, Element* stripped = nullptr);
/// Splits g = a * d with a in G_theta and d the shortest element of G_theta g.
[[nodiscard]] Element strip_head(const Element& g, VertexSet theta, Element* stripped = nullptr);

/// Whether x lies in the product set G_a G_b of two standard parabolics.
[[nodiscard]] bool in_standard_product(const Element& x, VertexSet a, VertexSet b);

[[nodiscard]] Parabolic intersect(const Parabolic& p, const Parabolic& q);
[[nodiscard]] Parabolic normalizer(const Parabolic& p);
/// Smallest parabolic containing x.
[[nodiscard]] Parabolic parabolic_support(const Element& x);
/// q is a subgroup of p.
[[nodiscard]] bool contains(const Parabolic& p, const Parabolic& q);
[[nodiscard]] bool member(const Parabolic& p, const Element& x);
/// g p g^-1.
[[nodiscard]] Parabolic conjugate(const Parabolic& p, const Element& g);

struct ProductParabolic {
  Parabolic parabolic;
  /// The type is a connected component of the graph that is a clique.
  bool isolated_clique_type = false;
};

/// Inclusion-maximal parabolics that split as a product, as standard representatives.
[[nodiscard]] std::vector<ProductParabolic> maximal_product_parabolics(const PresentationPtr& p);

[[nodiscard]] Parabolic clique_factor(const Parabolic& p);
/// Clique factor (if non-trivial) then the non-clique join factors.
[[nodiscard]] std::vector<Parabolic> factors(const Parabolic& p);
[[nodiscard]] std::vector<Parabolic> clique_inclusive_cofactors(const Parabolic& p);
[[nodiscard]] std::vector<Parabolic> thick_free_factors(const Parabolic& p);

/// The amalgam G = G_star(v) *_{G_lk(v)} G_{V minus v} as data.
struct VertexSplitting {
  Parabolic star;
  Parabolic link;
  Parabolic complement;
};
[[nodiscard]] VertexSplitting vertex_splitting(const PresentationPtr& p, Vertex v);

}  // namespace grprod
