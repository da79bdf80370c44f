#include <gtest/gtest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <set>

#include "grprod/error.hpp"
#include "grprod/graph.hpp"
#include "grprod/graph_enum.hpp"
#include "grprod/join.hpp"
#include "grprod/oracle.hpp"
#include "support.hpp"

using namespace grprod;
using namespace grprod::test;

namespace {

constexpr int kIterations = 300;

SimpleGraph k3() { return SimpleGraph({"a", "b", "c"}, std::vector<SimpleGraph::Edge>{{"a", "b"}, {"b", "c"}, {"a", "c"}}); }
SimpleGraph p4() { return path({"a", "b", "c", "d"}); }

// Reference predicates written straight from the definitions.
bool naive_transvection_free(const SimpleGraph& g) {
  for (Vertex v = 0; v < g.size(); ++v) {
    for (Vertex w = 0; w < g.size(); ++w) {
      if (v != w && g.link(v).subset_of(g.star(w))) return false;
    }
  }
  return true;
}

bool naive_collapsible(const SimpleGraph& g, VertexSet lambda) {
  const VertexSet outside = g.vertices() - lambda;
  std::optional<VertexSet> common;
  for (Vertex x : lambda) {
    const VertexSet l = g.link(x) & outside;
    if (common && *common != l) return false;
    common = l;
  }
  return true;
}

bool naive_strongly_reduced(const SimpleGraph& g) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.size()); ++m) {
    const VertexSet s = VertexSet::from_bits(m);
    if (s.size() >= 2 && s != g.vertices() && naive_collapsible(g, s)) return false;
  }
  return true;
}

}  // namespace

TEST(SimpleGraph, RejectsMalformedInput) {
  using E = std::vector<SimpleGraph::Edge>;
  EXPECT_THROW(SimpleGraph({"a", "a"}, E{}), InputError);
  EXPECT_THROW(SimpleGraph({"a", "b"}, E{{"a", "a"}}), InputError);
  EXPECT_THROW(SimpleGraph({"a", "b"}, E{{"a", "c"}}), InputError);
  EXPECT_THROW(SimpleGraph({"a", "b"}, E{{"a", "b"}, {"b", "a"}}), InputError);
  EXPECT_THROW((void)k3().link(7), InputError);
  EXPECT_THROW(k3().check_vertex(3), InputError);
  EXPECT_THROW((void)k3().index_of("z"), InputError);
}

TEST(SimpleGraph, Link) {
  EXPECT_EQ(cycle(5).link(0), set_of({1, 4}));
  EXPECT_EQ(k3().link(0), set_of({1, 2}));
  EXPECT_EQ(empty_graph(3).link(1), VertexSet{});
}

TEST(SimpleGraph, Orthogonal) {
  const SimpleGraph c5 = cycle(5);
  EXPECT_EQ(c5.orthogonal(set_of({0})), set_of({1, 4}));
  EXPECT_EQ(c5.orthogonal(set_of({0, 2})), set_of({1}));
  EXPECT_EQ(k3().orthogonal(set_of({0, 1})), set_of({2}));
  EXPECT_EQ(c5.orthogonal(VertexSet{}), c5.vertices());
}

TEST(SimpleGraph, OrthogonalIsAntitoneAndBiorthogonalGrows) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < kIterations; ++i) {
    const std::size_t n = 1 + rng() % 8;
    const SimpleGraph g = random_graph(rng, n);
    const VertexSet a = random_subset(rng, n);
    const VertexSet b = a | random_subset(rng, n);
    EXPECT_TRUE(g.orthogonal(b).subset_of(g.orthogonal(a)));
    EXPECT_TRUE(a.subset_of(g.orthogonal(g.orthogonal(a))));
  }
}

TEST(Predicates, TransvectionFree) {
  EXPECT_TRUE(is_transvection_free(cycle(5)));
  EXPECT_FALSE(is_transvection_free(k3()));
  EXPECT_FALSE(is_transvection_free(p4()));
}

TEST(Predicates, PartialConjugation) {
  EXPECT_FALSE(has_partial_conjugation(cycle(5)));
  EXPECT_TRUE(has_partial_conjugation(path({"a", "b", "c", "d", "e"})));
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_FALSE(has_partial_conjugation(complete(n)));
}

TEST(Predicates, StronglyReduced) {
  EXPECT_TRUE(is_strongly_reduced(cycle(5)));
  EXPECT_FALSE(is_strongly_reduced(path({"a", "b", "c"})));
  EXPECT_TRUE(is_strongly_reduced(p4()));
  EXPECT_FALSE(is_strongly_reduced(k3()));
  EXPECT_THROW((void)is_strongly_reduced(empty_graph(13)), EnumerationError);
}

TEST(Predicates, MatchNaiveDefinitionsOnRandomGraphs) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < kIterations; ++i) {
    const SimpleGraph g = random_graph(rng, 1 + rng() % 7);
    EXPECT_EQ(is_transvection_free(g), naive_transvection_free(g));
    EXPECT_EQ(is_strongly_reduced(g), naive_strongly_reduced(g));
    const VertexSet s = random_subset(rng, g.size());
    EXPECT_EQ(is_collapsible(g, s), naive_collapsible(g, s));
  }
}

TEST(Predicates, JoinDecompose) {
  const auto square = join_decompose(cycle(4));
  ASSERT_EQ(square.size(), 2U);
  EXPECT_EQ(square[0], set_of({0, 2}));
  EXPECT_EQ(square[1], set_of({1, 3}));
  EXPECT_EQ(join_decompose(cycle(5)).size(), 1U);
  EXPECT_EQ(join_decompose(k3()), (std::vector<VertexSet>{set_of({0}), set_of({1}), set_of({2})}));
  EXPECT_THROW((void)join_decompose(SimpleGraph{}), InputError);
}

TEST(Predicates, JoinDecomposeIsAJoinOfIrreducibles) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < kIterations; ++i) {
    const SimpleGraph g = random_graph(rng, 1 + rng() % 8);
    const auto parts = join_decompose(g);
    VertexSet all;
    for (std::size_t a = 0; a < parts.size(); ++a) {
      EXPECT_FALSE(parts[a].intersects(all));
      all |= parts[a];
      for (std::size_t b = a + 1; b < parts.size(); ++b) {
        for (Vertex u : parts[a]) EXPECT_TRUE(parts[b].subset_of(g.link(u)));
      }
      // Irreducible: complement of the induced part is connected.
      EXPECT_EQ(g.complement_components(parts[a]).size(), 1U);
    }
    EXPECT_EQ(all, g.vertices());
  }
}

TEST(Predicates, UntransvectableVertices) {
  EXPECT_EQ(untransvectable_vertices(cycle(5)), cycle(5).vertices());
  EXPECT_EQ(untransvectable_vertices(k3()), VertexSet{});
  EXPECT_EQ(untransvectable_vertices(p4()), set_of({1, 2}));
}

TEST(Predicates, UntransvectableInvariantUnderAutomorphisms) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const SimpleGraph& g : isomorphism_classes(n)) {
      const VertexSet u = untransvectable_vertices(g);
      for (const auto& perm : oracle::automorphisms(g)) {
        VertexSet image;
        for (Vertex v : u) image.insert(perm[v]);
        EXPECT_EQ(image, u);
      }
    }
  }
}

TEST(Predicates, CliqueReduced) {
  EXPECT_TRUE(is_clique_reduced(cycle(5)));
  EXPECT_FALSE(is_clique_reduced(complete(2)));
  EXPECT_TRUE(is_clique_reduced(empty_graph(2)));
}

TEST(Predicates, Cliques) {
  const auto c5 = cliques(cycle(5));
  EXPECT_EQ(c5.size(), 11U);  // empty, 5 vertices, 5 edges
  EXPECT_EQ(c5.front(), VertexSet{});
  EXPECT_EQ(cliques(complete(4)).size(), 16U);
}

TEST(Predicates, DotIsDeterministic) {
  const std::string dot = to_dot(p4(), "P4");
  EXPECT_EQ(dot, to_dot(p4(), "P4"));
  EXPECT_NE(dot.find("\"a\" -- \"b\""), std::string::npos);
}

TEST(Dichotomy, HoldsOnAllSmallGraphs) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const SimpleGraph& g : isomorphism_classes(n)) {
      if (!is_transvection_free(g) || has_partial_conjugation(g)) continue;
      const auto parts = join_decompose(g);
      EXPECT_TRUE(is_strongly_reduced(g) || parts.size() >= 2) << to_dot(g);
      for (VertexSet part : parts) {
        const SimpleGraph h = g.induced(part);
        EXPECT_GE(h.size(), 2U);
        EXPECT_TRUE(is_strongly_reduced(h));
        EXPECT_TRUE(is_transvection_free(h));
      }
    }
  }
}

TEST(Enumeration, ClassCountsMatchKnownSequence) {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 0; n <= 7; ++n) EXPECT_EQ(isomorphism_classes(n).size(), expected[n]) << n;
}

TEST(Enumeration, CanonicalCodeIsAnIsomorphismInvariant) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < kIterations; ++i) {
    const std::size_t n = 1 + rng() % 8;
    const SimpleGraph g = random_graph(rng, n);
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    const SimpleGraph h = g.permuted(order);
    EXPECT_EQ(canonical_code(g), canonical_code(h));
    EXPECT_TRUE(find_isomorphism(g, h).has_value());
  }
}

TEST(Enumeration, RawModeCoversEveryLabelledGraph) {
  std::size_t count = 0;
  std::set<std::uint64_t> codes;
  for_each_graph(4, EnumerationMode::raw, [&](const SimpleGraph& g) {
    ++count;
    codes.insert(canonical_code(g));
  });
  EXPECT_EQ(count, 64U);
  EXPECT_EQ(codes.size(), 11U);
}

TEST(Enumeration, FindIsomorphismRespectsCompatibility) {
  const SimpleGraph g = p4();
  const auto sigma = find_isomorphism(g, g);
  ASSERT_TRUE(sigma);
  EXPECT_EQ(*sigma, (std::vector<Vertex>{0, 1, 2, 3}));
  const auto flip = find_isomorphism(g, g, [](Vertex v, Vertex w) { return v == 0 ? w == 3 : true; });
  ASSERT_TRUE(flip);
  EXPECT_EQ(*flip, (std::vector<Vertex>{3, 2, 1, 0}));
  EXPECT_FALSE(find_isomorphism(cycle(4), p4()));
}

TEST(Join, MaximalJoinSubsetsOfC5AreStars) {
  const SimpleGraph c5 = cycle(5);
  const auto m = maximal_join_subsets(c5, c5.vertices());
  ASSERT_EQ(m.size(), 5U);
  for (Vertex v = 0; v < 5; ++v) EXPECT_NE(std::find(m.begin(), m.end(), c5.star(v)), m.end());
}

TEST(Join, ThickComponentsAndCliqueFactor) {
  const SimpleGraph c5 = cycle(5);
  EXPECT_EQ(thick_components(c5, c5.vertices() - c5.star(0)), (std::vector<VertexSet>{set_of({2, 3})}));
  EXPECT_EQ(clique_factor(c5, c5.star(0)), set_of({0}));
  EXPECT_TRUE(is_isolated_clique_type(empty_graph(2), set_of({0, 1}), set_of({0})));
}
