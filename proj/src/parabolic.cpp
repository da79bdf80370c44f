#include "grprod/parabolic.hpp"

#include "grprod/error.hpp"
#include "grprod/join.hpp"

namespace grprod {

namespace {

Element single(const Element& like, const Syllable& s) { return Element::letter(like.presentation_ptr(), s.vertex, s.letter); }

}  // namespace

Element strip_tail(const Element& g, VertexSet theta, Element* stripped) {
  Element d = g;
  Element b(g.presentation_ptr());
  while (true) {
    bool changed = false;
    for (const Syllable& s : tail(d)) {
      if (!theta.contains(s.vertex)) continue;
      const Element letter = single(d, s);
      d = multiply(d, invert(letter));
      b = multiply(letter, b);
      changed = true;
    }
    if (!changed) break;
  }
  if (stripped != nullptr) *stripped = std::move(b);
  return d;
}

Element strip_head(const Element& g, VertexSet theta, Element* stripped) {
  Element d = g;
  Element a(g.presentation_ptr());
  while (true) {
    bool changed = false;
    for (const Syllable& s : head(d)) {
      if (!theta.contains(s.vertex)) continue;
      const Element letter = single(d, s);
      d = multiply(invert(letter), d);
      a = multiply(a, letter);
      changed = true;
    }
    if (!changed) break;
  }
  if (stripped != nullptr) *stripped = std::move(a);
  return d;
}

bool in_standard_product(const Element& x, VertexSet a, VertexSet b) {
  return strip_head(x, a).support().subset_of(b);
}

Parabolic Parabolic::canonical(const Element& g, VertexSet lambda) {
  const SimpleGraph& graph = g.presentation().graph();
  graph.check_subset(lambda);
  return Parabolic(strip_tail(g, lambda | graph.orthogonal(lambda)), lambda);
}

Parabolic Parabolic::standard(const PresentationPtr& p, VertexSet lambda) {
  p->graph().check_subset(lambda);
  return Parabolic(Element(p), lambda);
}

std::strong_ordering operator<=>(const Parabolic& a, const Parabolic& b) {
  if (auto c = a.type_ <=> b.type_; c != 0) return c;
  return a.conjugator_ <=> b.conjugator_;
}

Parabolic intersect(const Parabolic& p, const Parabolic& q) {
  require_same_presentation(p.conjugator(), q.conjugator());
  const SimpleGraph& graph = p.presentation().graph();
  // p ∩ q = h (G_A ∩ x G_B x^-1) h^-1 with h = q's conjugator, x = h^-1 g.
  const Element& h = q.conjugator();
  const VertexSet a_type = q.type();
  const VertexSet b_type = p.type();
  Element x = multiply(invert(h), p.conjugator());
  // Write x = a d b with a in G_A, b in G_B and d without head in A or tail in B.
  Element a(x.presentation_ptr());
  while (true) {
    Element a_part(x.presentation_ptr());
    x = strip_head(x, a_type, &a_part);
    a = multiply(a, a_part);
    const std::size_t before = x.syllable_count();
    x = strip_tail(x, b_type);
    if (x.syllable_count() == before && a_part.is_identity()) break;
  }
  // G_A ∩ d G_B d^-1 is generated by the vertex groups of A ∩ B that commute with all of d.
  VertexSet upsilon;
  const VertexSet d_support = x.support();
  for (Vertex v : a_type & b_type) {
    if (d_support.subset_of(graph.link(v))) upsilon.insert(v);
  }
  return Parabolic::canonical(multiply(h, a), upsilon);
}

Parabolic normalizer(const Parabolic& p) {
  const SimpleGraph& graph = p.presentation().graph();
  return Parabolic::canonical(p.conjugator(), p.type() | graph.orthogonal(p.type()));
}

Parabolic parabolic_support(const Element& x) {
  Element conj(x.presentation_ptr());
  Element y = x;
  // Conjugate away a head syllable whenever another syllable at the same vertex sits in the tail.
  while (true) {
    const auto h = head(y);
    const auto t = tail(y);
    const Syllable* peel = nullptr;
    for (const Syllable& s : h) {
      std::size_t at_vertex = 0;
      for (const Syllable& w : y.word()) at_vertex += w.vertex == s.vertex ? 1U : 0U;
      if (at_vertex < 2) continue;
      for (const Syllable& u : t) {
        if (u.vertex == s.vertex) peel = &s;
      }
      if (peel != nullptr) break;
    }
    if (peel == nullptr) break;
    const Element s = single(y, *peel);
    conj = multiply(conj, s);
    y = conjugate(y, invert(s));
  }
  return Parabolic::canonical(conj, y.support());
}

bool member(const Parabolic& p, const Element& x) {
  require_same_presentation(p.conjugator(), x);
  const Element& g = p.conjugator();
  return conjugate(x, invert(g)).support().subset_of(p.type());
}

bool contains(const Parabolic& p, const Parabolic& q) { return intersect(p, q) == q; }

Parabolic conjugate(const Parabolic& p, const Element& g) {
  return Parabolic::canonical(multiply(g, p.conjugator()), p.type());
}

std::vector<ProductParabolic> maximal_product_parabolics(const PresentationPtr& p) {
  const SimpleGraph& g = p->graph();
  std::vector<ProductParabolic> out;
  for (VertexSet s : maximal_join_subsets(g, g.vertices())) {
    out.push_back({Parabolic::standard(p, s), is_isolated_clique_type(g, g.vertices(), s)});
  }
  return out;
}

Parabolic clique_factor(const Parabolic& p) {
  return Parabolic::canonical(p.conjugator(), clique_factor(p.presentation().graph(), p.type()));
}

std::vector<Parabolic> factors(const Parabolic& p) {
  std::vector<Parabolic> out;
  for (VertexSet f : factor_types(p.presentation().graph(), p.type())) {
    out.push_back(Parabolic::canonical(p.conjugator(), f));
  }
  return out;
}

std::vector<Parabolic> clique_inclusive_cofactors(const Parabolic& p) {
  std::vector<Parabolic> out;
  for (VertexSet f : cofactor_types(p.presentation().graph(), p.type())) {
    out.push_back(Parabolic::canonical(p.conjugator(), f));
  }
  return out;
}

std::vector<Parabolic> thick_free_factors(const Parabolic& p) {
  std::vector<Parabolic> out;
  for (VertexSet f : thick_components(p.presentation().graph(), p.type())) {
    out.push_back(Parabolic::canonical(p.conjugator(), f));
  }
  return out;
}

VertexSplitting vertex_splitting(const PresentationPtr& p, Vertex v) {
  const SimpleGraph& g = p->graph();
  g.check_vertex(v);
  return {Parabolic::standard(p, g.star(v)), Parabolic::standard(p, g.link(v)),
          Parabolic::standard(p, g.vertices().without(v))};
}

}  // namespace grprod
