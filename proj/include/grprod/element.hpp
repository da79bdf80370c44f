#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "grprod/presentation.hpp"

namespace grprod {

/// One vertex-group letter placed at a vertex.
struct Syllable {
  Vertex vertex = 0;
  Letter letter;

  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Element of a graph product, stored as its canonical reduced word.
///
/// The canonical word is the reduced word obtained by repeatedly emitting the
/// syllable with the smallest vertex index among those that can be moved to the
/// front. Two elements are equal exactly when their canonical words are equal.
class Element {
 public:
  /// The identity of `p`. Throws UnsupportedLabelError if p has labels without arithmetic.
  explicit Element(PresentationPtr p);

  /// Normal form of the product of the given syllables (identity letters allowed).
  static Element normalize(PresentationPtr p, std::span<const Syllable> raw);
  /// A single vertex-group element.
  static Element letter(PresentationPtr p, Vertex v, Letter letter);

  [[nodiscard]] const Presentation& presentation() const { return *pres_; }
  [[nodiscard]] const PresentationPtr& presentation_ptr() const { return pres_; }
  [[nodiscard]] std::span<const Syllable> word() const { return word_; }
  [[nodiscard]] std::size_t syllable_count() const { return word_.size(); }
  [[nodiscard]] bool is_identity() const { return word_.empty(); }
  /// Vertices carrying a syllable.
  [[nodiscard]] VertexSet support() const;

  /// Right multiplication by one syllable; cheaper than a general product.
  [[nodiscard]] Element times(const Syllable& s) const;

  friend bool operator==(const Element& a, const Element& b);
  /// Orders by canonical word; only meaningful within one presentation.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

 private:
  Element(PresentationPtr p, std::vector<Syllable> canonical_word);

  PresentationPtr pres_;
  std::vector<Syllable> word_;

  friend Element multiply(const Element&, const Element&);
  friend Element invert(const Element&);
  friend Element retract(const Element&, VertexSet);
};

[[nodiscard]] Element multiply(const Element& x, const Element& y);
[[nodiscard]] Element invert(const Element& x);
/// by * x * by^-1.
[[nodiscard]] Element conjugate(const Element& x, const Element& by);
inline Element operator*(const Element& x, const Element& y) { return multiply(x, y); }

/// Sum of letter lengths; equals the word length in the union of the vertex generating sets.
[[nodiscard]] std::uint64_t word_length(const Element& x);

/// Syllables that some reduced word for x starts with, in canonical order.
[[nodiscard]] std::vector<Syllable> head(const Element& x);
/// Syllables that some reduced word for x ends with, in canonical order.
[[nodiscard]] std::vector<Syllable> tail(const Element& x);
/// All syllables of x (representative independent), in canonical order.
[[nodiscard]] std::vector<Syllable> syllables(const Element& x);

/// Image under the retraction onto the standard subgroup on `lambda`.
[[nodiscard]] Element retract(const Element& x, VertexSet lambda);

/// Throws PresentationMismatchError unless x and y live over the same presentation.
void require_same_presentation(const Element& x, const Element& y);

enum class BallMetric {
  word_length,     ///< |g| in the union of the vertex generating sets
  syllable_count,  ///< number of syllables; finite labels only
};

struct BallOptions {
  BallMetric metric = BallMetric::word_length;
  /// Infinite labels are enumerated only when this is set (the radius is the bound).
  bool allow_infinite_labels = false;
  /// Hard cap on the number of elements; exceeding it throws EnumerationError.
  std::size_t max_elements = 2'000'000;
};

/// All elements of length at most `radius`, sorted by (length, canonical word).
[[nodiscard]] std::vector<Element> ball(const PresentationPtr& p, std::size_t radius, const BallOptions& options = {});

/// Length of x in the given ball metric.
[[nodiscard]] std::uint64_t metric_length(const Element& x, BallMetric metric);

struct ElementHash {
  std::size_t operator()(const Element& x) const noexcept;
};

}  // namespace grprod
