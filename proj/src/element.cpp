#include "grprod/element.hpp"

#include <algorithm>
#include <set>

#include "grprod/error.hpp"

namespace grprod {

namespace {

// Right-multiplies a reduced word by one reduced letter, keeping it reduced.
// The letter slides left past syllables of adjacent vertices; it merges with the
// first syllable at its own vertex, and stops at anything else.
void push_syllable(const Presentation& p, std::vector<Syllable>& word, Syllable s) {
  if (s.letter.is_identity()) return;
  const SimpleGraph& g = p.graph();
  for (std::size_t i = word.size(); i-- > 0;) {
    const Vertex u = word[i].vertex;
    if (u == s.vertex) {
      Letter merged = p.label(u).multiply(word[i].letter, s.letter);
      if (merged.is_identity()) {
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        word[i].letter = std::move(merged);
      }
      return;
    }
    if (!g.adjacent(u, s.vertex)) break;
  }
  word.push_back(std::move(s));
}

// Reorders a reduced word into canonical order: at each step take, among the
// syllables with no non-commuting syllable before them, the smallest vertex.
std::vector<Syllable> canonical_order(const SimpleGraph& g, std::vector<Syllable> word) {
  const std::size_t k = word.size();
  if (k < 2) return word;
  std::vector<std::size_t> blockers(k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!g.adjacent(word[i].vertex, word[j].vertex)) ++blockers[j];
    }
  }
  std::vector<bool> taken(k, false);
  std::vector<Syllable> out;
  out.reserve(k);
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t pick = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (!taken[i] && blockers[i] == 0 && (pick == k || word[i].vertex < word[pick].vertex)) pick = i;
    }
    taken[pick] = true;
    for (std::size_t j = pick + 1; j < k; ++j) {
      if (!taken[j] && !g.adjacent(word[pick].vertex, word[j].vertex)) --blockers[j];
    }
    out.push_back(std::move(word[pick]));
  }
  return out;
}

}  // namespace

Element::Element(PresentationPtr p) : pres_(std::move(p)) {
  if (!pres_) throw InputError("element needs a presentation");
  pres_->require_arithmetic();
}

Element::Element(PresentationPtr p, std::vector<Syllable> canonical_word)
    : pres_(std::move(p)), word_(std::move(canonical_word)) {}

Element Element::normalize(PresentationPtr p, std::span<const Syllable> raw) {
  Element base(std::move(p));
  const Presentation& pres = *base.pres_;
  std::vector<Syllable> word;
  for (const Syllable& s : raw) {
    pres.graph().check_vertex(s.vertex);
    push_syllable(pres, word, Syllable{s.vertex, pres.label(s.vertex).reduce(s.letter)});
  }
  base.word_ = canonical_order(pres.graph(), std::move(word));
  return base;
}

Element Element::letter(PresentationPtr p, Vertex v, Letter letter) {
  const Syllable s{v, std::move(letter)};
  return normalize(std::move(p), std::span<const Syllable>(&s, 1));
}

VertexSet Element::support() const {
  VertexSet s;
  for (const auto& syl : word_) s.insert(syl.vertex);
  return s;
}

Element Element::times(const Syllable& s) const {
  std::vector<Syllable> word = word_;
  push_syllable(*pres_, word, s);
  return Element(pres_, canonical_order(pres_->graph(), std::move(word)));
}

bool operator==(const Element& a, const Element& b) {
  if (a.pres_ != b.pres_ && !(*a.pres_ == *b.pres_)) return false;
  return a.word_ == b.word_;
}

std::strong_ordering operator<=>(const Element& a, const Element& b) { return a.word_ <=> b.word_; }

void require_same_presentation(const Element& x, const Element& y) {
  if (x.presentation_ptr() != y.presentation_ptr() && !(x.presentation() == y.presentation())) {
    throw PresentationMismatchError("elements belong to different presentations");
  }
}

Element multiply(const Element& x, const Element& y) {
  require_same_presentation(x, y);
  if (y.word_.empty()) return x;
  if (x.word_.empty()) return y;
  std::vector<Syllable> word = x.word_;
  for (const Syllable& s : y.word_) push_syllable(*x.pres_, word, s);
  return Element(x.pres_, canonical_order(x.pres_->graph(), std::move(word)));
}

Element invert(const Element& x) {
  // The reversed word of inverses is reduced; only its order needs fixing.
  std::vector<Syllable> word;
  word.reserve(x.word_.size());
  for (auto it = x.word_.rbegin(); it != x.word_.rend(); ++it) {
    word.push_back(Syllable{it->vertex, x.pres_->label(it->vertex).inverse(it->letter)});
  }
  return Element(x.pres_, canonical_order(x.pres_->graph(), std::move(word)));
}

Element conjugate(const Element& x, const Element& by) { return multiply(multiply(by, x), invert(by)); }

std::uint64_t word_length(const Element& x) {
  std::uint64_t total = 0;
  for (const Syllable& s : x.word()) total += x.presentation().label(s.vertex).length(s.letter);
  return total;
}

std::vector<Syllable> head(const Element& x) {
  const auto w = x.word();
  const SimpleGraph& g = x.presentation().graph();
  std::vector<Syllable> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool front = true;
    for (std::size_t j = 0; j < i && front; ++j) front = g.adjacent(w[j].vertex, w[i].vertex);
    if (front) out.push_back(w[i]);
  }
  return out;
}

std::vector<Syllable> tail(const Element& x) {
  const auto w = x.word();
  const SimpleGraph& g = x.presentation().graph();
  std::vector<Syllable> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool back = true;
    for (std::size_t j = i + 1; j < w.size() && back; ++j) back = g.adjacent(w[j].vertex, w[i].vertex);
    if (back) out.push_back(w[i]);
  }
  return out;
}

std::vector<Syllable> syllables(const Element& x) { return {x.word().begin(), x.word().end()}; }

Element retract(const Element& x, VertexSet lambda) {
  x.presentation().graph().check_subset(lambda);
  std::vector<Syllable> word;
  for (const Syllable& s : x.word_) {
    if (lambda.contains(s.vertex)) push_syllable(*x.pres_, word, s);
  }
  return Element(x.pres_, canonical_order(x.pres_->graph(), std::move(word)));
}

std::uint64_t metric_length(const Element& x, BallMetric metric) {
  return metric == BallMetric::word_length ? word_length(x) : x.syllable_count();
}

std::vector<Element> ball(const PresentationPtr& p, std::size_t radius, const BallOptions& options) {
  const Element identity(p);
  const bool finite = p->all_finite();
  if (!finite && options.metric == BallMetric::syllable_count) {
    throw EnumerationError("syllable-count balls need finite vertex groups");
  }
  if (!finite && !options.allow_infinite_labels) {
    throw EnumerationError("presentation has infinite vertex groups; enumeration must be explicitly bounded");
  }
  // One step of the metric: a generator, or any non-identity letter for syllable balls.
  std::vector<Syllable> steps;
  for (Vertex v = 0; v < p->graph().size(); ++v) {
    const auto letters = options.metric == BallMetric::word_length ? p->label(v).generators()
                                                                   : p->label(v).non_identity_letters();
    for (const auto& l : letters) steps.push_back(Syllable{v, l});
  }
  std::set<Element> seen{identity};
  std::vector<Element> frontier{identity};
  for (std::size_t r = 0; r < radius && !frontier.empty(); ++r) {
    std::vector<Element> next;
    for (const Element& x : frontier) {
      for (const Syllable& s : steps) {
        Element y = x.times(s);
        if (seen.insert(y).second) {
          if (seen.size() > options.max_elements) {
            throw EnumerationError("ball exceeds " + std::to_string(options.max_elements) + " elements");
          }
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<std::uint64_t, Element>> keyed;
  keyed.reserve(seen.size());
  for (const Element& x : seen) keyed.emplace_back(metric_length(x, options.metric), x);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Element> out;
  out.reserve(keyed.size());
  for (auto& [len, x] : keyed) out.push_back(std::move(x));
  return out;
}

std::size_t ElementHash::operator()(const Element& x) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) { h = (h ^ v) * 1099511628211ULL; };
  for (const Syllable& s : x.word()) {
    mix(s.vertex);
    for (std::int64_t d : s.letter.data) mix(static_cast<std::uint64_t>(d));
    mix(0xffU);
  }
  return h;
}

}  // namespace grprod
