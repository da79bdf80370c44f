#include "grprod/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "grprod/complexes.hpp"
#include "grprod/graph_enum.hpp"
#include "grprod/oracle.hpp"
#include "grprod/parabolic.hpp"
#include "grprod/recognition.hpp"
#include "grprod/word_syntax.hpp"

namespace grprod::suites {

namespace {

constexpr std::size_t kMaxSamples = 5;

class Stopwatch {
 public:
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string describe(const SimpleGraph& g) {
  std::ostringstream os;
  os << g.size() << " vertices, edges {";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? "" : ",") << u << '-' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

Letter random_letter(std::mt19937_64& rng, const VertexLabel& label, bool allow_identity) {
  while (true) {
    Letter raw;
    if (label.kind() == LabelKind::cyclic) {
      const std::int64_t n = label.parameter();
      const std::int64_t spread = n == 0 ? 4 : n;
      raw = Letter::power(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * spread + 1)) - spread);
    } else {
      const std::size_t len = rng() % 4;
      for (std::size_t i = 0; i < len; ++i) {
        const auto gen = static_cast<std::int64_t>(1 + rng() % static_cast<std::uint64_t>(label.parameter()));
        raw.data.push_back((rng() & 1U) ? gen : -gen);
      }
    }
    Letter reduced = label.reduce(std::move(raw));
    if (allow_identity || !reduced.is_identity()) return reduced;
  }
}

std::vector<Syllable> random_raw(std::mt19937_64& rng, const Presentation& p, std::size_t max_length) {
  const std::size_t len = rng() % (max_length + 1);
  std::vector<Syllable> out;
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex v = rng() % p.graph().size();
    out.push_back(Syllable{v, random_letter(rng, p.label(v), true)});
  }
  return out;
}

std::vector<VertexLabel> labelling(std::size_t n, int scheme) {
  std::vector<VertexLabel> out;
  for (std::size_t v = 0; v < n; ++v) {
    const std::int64_t order = scheme == 0 ? 2 : scheme == 1 ? 3 : (v % 2 == 0 ? 2 : 3);
    out.push_back(VertexLabel::cyclic(order));
  }
  return out;
}

bool bits_subset(const oracle::BallOracle::Bits& a, const oracle::BallOracle::Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

}  // namespace

void SuiteResult::fail(std::string what) {
  ++failures;
  if (samples.size() < kMaxSamples) samples.push_back(std::move(what));
}

SuiteResult dichotomy(std::size_t min_vertices, std::size_t max_vertices) {
  Stopwatch clock;
  SuiteResult r("dichotomy");
  for (std::size_t n = min_vertices; n <= max_vertices; ++n) {
    for (const SimpleGraph& g : isomorphism_classes(n)) {
      ++r.checked;
      if (!is_transvection_free(g) || has_partial_conjugation(g)) continue;
      const auto parts = join_decompose(g);
      if (!is_strongly_reduced(g) && parts.size() < 2) r.fail("neither strongly reduced nor a join: " + describe(g));
      for (VertexSet part : parts) {
        const SimpleGraph h = g.induced(part);
        if (h.size() < 2 || !is_strongly_reduced(h) || !is_transvection_free(h)) {
          r.fail("bad join factor in " + describe(g));
        }
      }
    }
  }
  r.seconds = clock.seconds();
  return r;
}

SuiteResult zoom_equivalence(std::size_t min_vertices, std::size_t max_vertices) {
  Stopwatch clock;
  SuiteResult r("zoom-equivalence");
  for (std::size_t n = min_vertices; n <= max_vertices; ++n) {
    for (const SimpleGraph& g : isomorphism_classes(n)) {
      const VertexSet direct = untransvectable_vertices(g);
      ++r.checked;
      if (untransvectable_via_chains(g, ChainVariant::plain) != direct) r.fail("plain chains disagree on " + describe(g));
      if (n >= 2 && is_strongly_reduced(g)) {
        ++r.checked;
        if (untransvectable_via_chains(g, ChainVariant::thick) != direct) r.fail("thick chains disagree on " + describe(g));
      }
    }
  }
  r.seconds = clock.seconds();
  return r;
}

SuiteResult normal_form(const NormalFormParams& params) {
  Stopwatch clock;
  SuiteResult r("normal-form");
  std::uint64_t class_index = 0;
  for (std::size_t n = 1; n <= params.max_vertices; ++n) {
    for (const SimpleGraph& g : isomorphism_classes(n)) {
      for (int scheme = 0; scheme < 3; ++scheme) {
        std::mt19937_64 rng(params.seed * 1'000'003 + class_index++);
        const auto p = Presentation::make(g, labelling(n, scheme));
        std::optional<oracle::CoxeterRepresentation> coxeter;
        if (scheme == 0) coxeter.emplace(*p);
        const bool clique = g.is_clique(g.vertices());
        const std::string where = describe(g) + ", labels " + (scheme == 0 ? "Z/2" : scheme == 1 ? "Z/3" : "mixed");

        for (std::size_t t = 0; t < params.triples_per_class; ++t) {
          const auto rx = random_raw(rng, *p, params.max_word_length);
          const auto ry = random_raw(rng, *p, params.max_word_length);
          const auto rz = random_raw(rng, *p, params.max_word_length);
          const Element x = Element::normalize(p, rx);
          const Element y = Element::normalize(p, ry);
          const Element z = Element::normalize(p, rz);
          const Element left = (x * y) * z;
          std::vector<Syllable> raw = rx;
          raw.insert(raw.end(), ry.begin(), ry.end());
          raw.insert(raw.end(), rz.begin(), rz.end());
          ++r.checked;
          bool ok = left == x * (y * z) && left == Element::normalize(p, raw) && oracle::represents(*p, raw, left);
          if (coxeter) ok = ok && coxeter->evaluate(raw) == coxeter->evaluate(left.word());
          if (clique) {
            ok = ok && oracle::evaluate_in_direct_product(*p, raw) == oracle::evaluate_in_direct_product(*p, left.word());
          }
          if (!ok) r.fail("product mismatch for " + format_syllables(*p, raw) + " on " + where);
        }

        for (std::size_t s = 0; s < params.swap_sequences_per_class; ++s) {
          const Element x = Element::normalize(p, random_raw(rng, *p, 2 * params.max_word_length));
          std::vector<Syllable> w(x.word().begin(), x.word().end());
          ++r.checked;
          if (w.size() >= 2) {
            const std::size_t swaps = 1 + rng() % (4 * w.size());
            for (std::size_t k = 0; k < swaps; ++k) {
              const std::size_t i = rng() % (w.size() - 1);
              if (g.adjacent(w[i].vertex, w[i + 1].vertex)) std::swap(w[i], w[i + 1]);
            }
          }
          if (!(Element::normalize(p, w) == x) || !oracle::same_trace(*p, w, x.word())) {
            r.fail("shuffle changed " + format_element(x) + " on " + where);
          }
        }
      }
    }
  }
  r.seconds = clock.seconds();
  return r;
}

SuiteResult parabolic_oracle(const ParabolicParams& params) {
  Stopwatch clock;
  SuiteResult r("parabolic-oracle");
  for (std::size_t n = 1; n <= params.max_vertices; ++n) {
    for (const SimpleGraph& g : isomorphism_classes(n)) {
      const auto p = Presentation::uniform(g, VertexLabel::cyclic(2));
      const oracle::BallOracle o(p, params.ball_radius);
      const auto& big = o.elements();
      const auto conjugators = ball(p, params.conjugator_radius);
      const std::string where = describe(g);

      std::map<Element, std::size_t> index;  // position in the oracle ball
      for (std::size_t i = 0; i < big.size(); ++i) index.emplace(big[i], i);
      auto has_bit = [](const oracle::BallOracle::Bits& b, std::size_t i) { return ((b[i / 64] >> (i % 64)) & 1U) != 0; };

      std::set<Parabolic> found;
      for (const Element& c : conjugators) {
        for_each_subset(g.vertices(), [&](VertexSet lambda) { found.insert(Parabolic::canonical(c, lambda)); });
      }
      const std::vector<Parabolic> qs(found.begin(), found.end());
      std::vector<oracle::BallOracle::Bits> q_bits;
      q_bits.reserve(qs.size());
      for (const Parabolic& q : qs) q_bits.push_back(o.members(q.conjugator(), q.type()));

      for (std::size_t qi = 0; qi < qs.size(); ++qi) {
        const Parabolic& q = qs[qi];
        const std::string qname = format_element(q.conjugator()) + " G" + std::to_string(q.type().bits());

        const Parabolic nz = normalizer(q);
        ++r.checked;
        if (o.members(nz.conjugator(), nz.type()) != o.normalizer_members(q.conjugator(), q.type())) {
          r.fail("normalizer of " + qname + " on " + where);
        }
        for (const Element& x : conjugators) {
          ++r.checked;
          if (member(q, x) != has_bit(q_bits[qi], index.at(x))) r.fail("member " + format_element(x) + " in " + qname);
        }
        for_each_subset(g.vertices(), [&](VertexSet l1) {
          const Parabolic std_p = Parabolic::standard(p, l1);
          const auto p_bits = o.members(Element(p), l1);
          ++r.checked;
          if (contains(std_p, q) != o.contains(Element(p), l1, q.conjugator(), q.type()) ||
              contains(q, std_p) != o.contains(q.conjugator(), q.type(), Element(p), l1)) {
            r.fail("contains for G" + std::to_string(l1.bits()) + " and " + qname + " on " + where);
          }
          const Parabolic meet = intersect(std_p, q);
          ++r.checked;
          if (o.members(meet.conjugator(), meet.type()) != oracle::bits_and(p_bits, q_bits[qi]) ||
              !o.contains(Element(p), l1, meet.conjugator(), meet.type()) ||
              !o.contains(q.conjugator(), q.type(), meet.conjugator(), meet.type())) {
            r.fail("intersection of G" + std::to_string(l1.bits()) + " and " + qname + " on " + where);
          }
        });
      }

      // Supports: contain x, and lie in every enumerated parabolic containing x.
      for (const Element& x : conjugators) {
        const Parabolic s = parabolic_support(x);
        const auto s_bits = o.members(s.conjugator(), s.type());
        const std::size_t xi = index.at(x);
        ++r.checked;
        bool ok = o.member(s.conjugator(), s.type(), x);
        for (std::size_t qi = 0; qi < qs.size() && ok; ++qi) {
          if (has_bit(q_bits[qi], xi) && !bits_subset(s_bits, q_bits[qi])) ok = false;
        }
        if (!ok) r.fail("support of " + format_element(x) + " on " + where);
      }
    }
  }
  r.seconds = clock.seconds();
  return r;
}

SuiteResult length_lemma(std::size_t triples, std::uint64_t seed) {
  Stopwatch clock;
  SuiteResult r("length-lemma");
  const SimpleGraph three_isolated = SimpleGraph::from_index_edges(3, {});
  std::vector<std::pair<Vertex, Vertex>> c5_edges;
  for (Vertex i = 0; i < 5; ++i) c5_edges.emplace_back(i, (i + 1) % 5);
  const SimpleGraph c5 = SimpleGraph::from_index_edges(5, c5_edges);
  const std::vector<PresentationPtr> presentations{
      Presentation::make(three_isolated, {VertexLabel::cyclic(0), VertexLabel::cyclic(3), VertexLabel::free(2)}),
      Presentation::uniform(three_isolated, VertexLabel::cyclic(0)),
      Presentation::uniform(c5, VertexLabel::cyclic(0)),
      Presentation::make(c5, {VertexLabel::free(2), VertexLabel::cyclic(0), VertexLabel::cyclic(0), VertexLabel::cyclic(0),
                              VertexLabel::cyclic(0)}),
  };
  std::mt19937_64 rng(seed);
  std::size_t attempt = 0;
  while (r.checked < triples) {
    const PresentationPtr& p = presentations[attempt++ % presentations.size()];
    const Vertex v = rng() % p->graph().size();
    const Element g = Element::normalize(p, random_raw(rng, *p, 6));
    const Element h = Element::normalize(p, random_raw(rng, *p, 6));
    auto at_v = [v](const Syllable& s) { return s.vertex == v; };
    const auto hg = head(g);
    const auto hh = head(h);
    if (std::any_of(hg.begin(), hg.end(), at_v) || std::any_of(hh.begin(), hh.end(), at_v)) continue;
    const Element z = Element::letter(p, v, random_letter(rng, p->label(v), false));
    const Element x = invert(g) * z * h;
    const auto all = syllables(x);
    ++r.checked;
    if (std::find(all.begin(), all.end(), z.word().front()) == all.end() || word_length(x) < word_length(z)) {
      r.fail("g=" + format_element(g) + " z=" + format_element(z) + " h=" + format_element(h));
    }
  }
  r.seconds = clock.seconds();
  return r;
}

SuiteResult building_counts() {
  Stopwatch clock;
  SuiteResult r("building-counts");
  {
    const auto edge = Presentation::uniform(SimpleGraph::from_index_edges(2, std::vector<std::pair<Vertex, Vertex>>{{0, 1}}),
                                            VertexLabel::cyclic(2));
    const BuildingBall b = building_ball(edge, 2);
    ++r.checked;
    if (b.vertices.size() != 9 || b.edges.size() != 12 || b.count_cubes(2) != 4) {
      r.fail("edge graph: " + std::to_string(b.vertices.size()) + " vertices, " + std::to_string(b.edges.size()) +
             " edges, " + std::to_string(b.count_cubes(2)) + " squares");
    }
  }
  std::vector<SimpleGraph> graphs;
  auto add = [&](std::size_t n, std::vector<std::pair<Vertex, Vertex>> e) { graphs.push_back(SimpleGraph::from_index_edges(n, e)); };
  for (std::size_t n = 3; n <= 7; ++n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    add(n, e);
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    }
    add(n, e);
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    add(n, e);
  }
  add(4, {{0, 1}, {0, 2}, {0, 3}});
  add(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  add(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  add(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  add(5, {});
  for (const SimpleGraph& g : graphs) {
    std::size_t clique_count = 0;
    std::size_t face_incidences = 0;
    for_each_subset(g.vertices(), [&](VertexSet s) {
      bool clique = true;
      for (Vertex u : s) clique = clique && (s.without(u)).subset_of(g.link(u));
      if (clique) {
        ++clique_count;
        face_incidences += s.size();
      }
    });
    const BuildingBall b = building_ball(Presentation::uniform(g, VertexLabel::cyclic(2)), 0);
    ++r.checked;
    if (b.vertices.size() != clique_count || b.edges.size() != face_incidences) {
      r.fail("fundamental domain of " + describe(g) + ": " + std::to_string(b.vertices.size()) + " vertices, expected " +
             std::to_string(clique_count));
    }
  }
  r.seconds = clock.seconds();
  return r;
}

SuiteResult combined_bijections(std::size_t pairs, std::size_t radius, std::uint64_t seed) {
  Stopwatch clock;
  SuiteResult r("combined-bijections");
  std::mt19937_64 rng(seed);
  ComplexOptions options;
  options.metric = BallMetric::syllable_count;
  for (std::size_t k = 0; k < pairs; ++k) {
    const std::size_t n = 2 + rng() % 3;
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        if (rng() & 1U) e.emplace_back(i, j);
      }
    }
    const SimpleGraph g = SimpleGraph::from_index_edges(n, e);
    std::vector<VertexLabel> src_labels;
    std::vector<VertexLabel> dst_labels;
    std::vector<LetterMap> tables(n);
    for (Vertex v = 0; v < n; ++v) {
      const auto order = static_cast<std::int64_t>(2 + rng() % 3);
      src_labels.push_back(VertexLabel::cyclic(order, "G" + std::to_string(v)));
      dst_labels.push_back(VertexLabel::cyclic(order, "H" + std::to_string(v)));
      std::vector<std::int64_t> images;
      for (std::int64_t a = 1; a < order; ++a) images.push_back(a);
      std::shuffle(images.begin(), images.end(), rng);
      for (std::int64_t a = 1; a < order; ++a) tables[v][Letter::power(a)] = Letter::power(images[static_cast<std::size_t>(a - 1)]);
    }
    const auto src = Presentation::make(g, src_labels);
    const auto dst = Presentation::make(g, dst_labels);
    const CombinedBijection theta(src, dst, tables);
    const std::string where = "pair " + std::to_string(k) + " over " + describe(g);

    auto check_extension = [&](const ExtensionBall& a, const ExtensionBall& b, const std::string& what) {
      ++r.checked;
      if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) {
        r.fail(what + " sizes differ on " + where);
        return;
      }
      std::map<Parabolic, std::size_t> where_in_b;
      for (std::size_t i = 0; i < b.nodes.size(); ++i) where_in_b.emplace(b.nodes[i], i);
      std::vector<std::size_t> image(a.nodes.size());
      std::set<std::size_t> hit;
      for (std::size_t i = 0; i < a.nodes.size(); ++i) {
        const Parabolic q = theta.apply(a.nodes[i]);
        const auto it = where_in_b.find(q);
        if (it == where_in_b.end() || q.type() != a.nodes[i].type()) {
          r.fail(what + " node outside the image ball on " + where);
          return;
        }
        image[i] = it->second;
        hit.insert(it->second);
      }
      const std::set<std::pair<std::size_t, std::size_t>> b_edges(b.edges.begin(), b.edges.end());
      bool ok = hit.size() == b.nodes.size();
      for (auto [i, j] : a.edges) ok = ok && b_edges.contains({std::min(image[i], image[j]), std::max(image[i], image[j])});
      if (!ok) r.fail(what + " adjacency not preserved on " + where);
    };
    check_extension(extension_ball(src, radius, options), extension_ball(dst, radius, options), "extension");
    check_extension(untransvectable_extension_ball(src, radius, options), untransvectable_extension_ball(dst, radius, options),
                    "untransvectable extension");

    const BuildingBall a = building_ball(src, radius, options);
    const BuildingBall b = building_ball(dst, radius, options);
    ++r.checked;
    if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size() || a.cubes.size() != b.cubes.size()) {
      r.fail("building sizes differ on " + where);
      continue;
    }
    std::vector<std::size_t> image(a.vertices.size());
    std::set<std::size_t> hit;
    bool ok = true;
    for (std::size_t i = 0; i < a.vertices.size() && ok; ++i) {
      const auto j = b.find(theta.apply(a.vertices[i]));
      ok = j && b.vertices[*j].type == a.vertices[i].type && b.vertices[*j].rank() == a.vertices[i].rank();
      if (ok) {
        image[i] = *j;
        hit.insert(*j);
      }
    }
    ok = ok && hit.size() == b.vertices.size();
    if (ok) {
      const std::set<std::pair<std::size_t, std::size_t>> b_edges(b.edges.begin(), b.edges.end());
      const std::set<Cube> b_cubes(b.cubes.begin(), b.cubes.end());
      for (auto [i, j] : a.edges) ok = ok && b_edges.contains({image[i], image[j]});
      for (const Cube& c : a.cubes) ok = ok && b_cubes.contains(Cube{image[c.bottom], image[c.top], c.dimension});
    }
    if (!ok) r.fail("building map is not a rank-preserving cubical isomorphism on " + where);
  }
  r.seconds = clock.seconds();
  return r;
}

}  // namespace grprod::suites
