#pragma once

// Brute-force reference computations. Nothing here calls the normal-form
// reordering, the parabolic calculus or the chain search it is used to check.

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "grprod/element.hpp"

namespace grprod::oracle {

/// Reduces a word over cyclic labels by the three elementary moves only: drop
/// identities, and merge two syllables at the same vertex whenever everything
/// between them commutes with that vertex. Letters are kept as residues in [0, n).
[[nodiscard]] std::vector<Syllable> green_reduce(const Presentation& p, std::span<const Syllable> raw);

/// Whether two reduced words are related by swaps of adjacent commuting syllables,
/// decided by comparing projections onto every pair of non-commuting vertices.
/// Letters are compared modulo the label order.
[[nodiscard]] bool same_trace(const Presentation& p, std::span<const Syllable> a, std::span<const Syllable> b);

/// green_reduce(raw) and x.word() describe the same element.
[[nodiscard]] bool represents(const Presentation& p, std::span<const Syllable> raw, const Element& x);

/// Faithful integer matrix representation of a graph product of copies of Z/2
/// (the geometric representation of the right-angled Coxeter group).
class CoxeterRepresentation {
 public:
  using Matrix = std::vector<std::int64_t>;

  /// Throws InputError unless every label is cyclic of order 2.
  explicit CoxeterRepresentation(const Presentation& p);

  [[nodiscard]] Matrix evaluate(std::span<const Syllable> word) const;
  [[nodiscard]] Matrix identity() const;
  [[nodiscard]] Matrix product(const Matrix& a, const Matrix& b) const;

 private:
  std::size_t n_;
  std::vector<Matrix> reflections_;
};

/// For a complete graph with cyclic labels: the element of the direct product
/// as a tuple of residues.
[[nodiscard]] std::vector<std::int64_t> evaluate_in_direct_product(const Presentation& p,
                                                                  std::span<const Syllable> word);

/// Every automorphism of g, by trying all vertex permutations.
[[nodiscard]] std::vector<std::vector<Vertex>> automorphisms(const SimpleGraph& g);

/// Subgroup computations restricted to a finite ball, for presentations with finite labels.
class BallOracle {
 public:
  using Bits = std::vector<std::uint64_t>;

  BallOracle(PresentationPtr p, std::size_t radius);

  [[nodiscard]] const std::vector<Element>& elements() const { return ball_; }
  [[nodiscard]] const PresentationPtr& presentation() const { return pres_; }

  /// x lies in c G_lambda c^-1.
  [[nodiscard]] bool member(const Element& c, VertexSet lambda, const Element& x) const;
  /// Ball elements lying in c G_lambda c^-1 (cached per conjugator).
  [[nodiscard]] Bits members(const Element& c, VertexSet lambda) const;
  /// c2 G_l2 c2^-1 is contained in c1 G_l1 c1^-1, checked on generators.
  [[nodiscard]] bool contains(const Element& c1, VertexSet l1, const Element& c2, VertexSet l2) const;
  /// Ball elements y with y P y^-1 = P for P = c G_lambda c^-1.
  [[nodiscard]] Bits normalizer_members(const Element& c, VertexSet lambda) const;
  /// Every element of c G_v c^-1 commutes with every element of d G_w d^-1.
  [[nodiscard]] bool commute(const Element& c, Vertex v, const Element& d, Vertex w) const;

 private:
  [[nodiscard]] const std::vector<VertexSet>& conjugated_supports(const Element& c) const;
  [[nodiscard]] std::vector<Element> generators(const Element& c, VertexSet lambda) const;

  PresentationPtr pres_;
  std::vector<Element> ball_;
  mutable std::unordered_map<Element, std::vector<VertexSet>, ElementHash> support_cache_;
};

[[nodiscard]] inline bool bits_equal(const BallOracle::Bits& a, const BallOracle::Bits& b) { return a == b; }
[[nodiscard]] BallOracle::Bits bits_and(const BallOracle::Bits& a, const BallOracle::Bits& b);

}  // namespace grprod::oracle
