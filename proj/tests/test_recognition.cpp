#include <gtest/gtest.h>

#include <algorithm>

#include "grprod/error.hpp"
#include "grprod/graph_enum.hpp"
#include "grprod/join.hpp"
#include "grprod/recognition.hpp"
#include "support.hpp"

using namespace grprod;
using namespace grprod::test;

namespace {

SimpleGraph p4() { return path({"a", "b", "c", "d"}); }

}  // namespace

TEST(Chains, C5Plain) {
  const SimpleGraph c5 = cycle(5);
  const auto chain = find_zoom_chain(c5, 0, ChainVariant::plain);
  ASSERT_TRUE(chain);
  ASSERT_EQ(chain->levels.size(), 1U);
  EXPECT_EQ(chain->levels[0].product, c5.star(0));
  EXPECT_EQ(chain->levels[0].factor, set_of({0}));
  EXPECT_FALSE(chain->levels[0].thick);
  EXPECT_TRUE(is_valid_chain(c5, *chain, set_of({0})));
}

TEST(Chains, P4Thick) {
  const SimpleGraph g = p4();
  const auto chain = find_zoom_chain(g, 1, ChainVariant::thick);
  ASSERT_TRUE(chain);
  ASSERT_EQ(chain->levels.size(), 1U);
  EXPECT_EQ(chain->levels[0].thick, g.vertices());
  EXPECT_EQ(chain->levels[0].product, set_of({0, 1, 2}));
  EXPECT_EQ(chain->levels[0].factor, set_of({1}));
  EXPECT_TRUE(is_valid_chain(g, *chain, set_of({1})));
  EXPECT_FALSE(find_zoom_chain(g, 0, ChainVariant::thick));
  EXPECT_FALSE(find_zoom_chain(g, 0, ChainVariant::plain));
}

TEST(Chains, UntransvectableViaChainsExamples) {
  EXPECT_EQ(untransvectable_via_chains(cycle(5), ChainVariant::plain), cycle(5).vertices());
  EXPECT_EQ(untransvectable_via_chains(complete(3), ChainVariant::plain), VertexSet{});
  EXPECT_EQ(untransvectable_via_chains(p4(), ChainVariant::plain), set_of({1, 2}));
  EXPECT_EQ(untransvectable_via_chains(p4(), ChainVariant::thick), set_of({1, 2}));
}

TEST(Chains, ThickPreconditions) {
  EXPECT_THROW((void)find_zoom_chain(complete(3), 0, ChainVariant::thick), InputError);
  EXPECT_THROW((void)find_zoom_chain(complete(1), 0, ChainVariant::thick), InputError);
  EXPECT_THROW((void)untransvectable_via_chains(path({"a", "b", "c"}), ChainVariant::thick), InputError);
}

TEST(Chains, SingleVertexHasTheEmptyChain) {
  const auto chain = find_zoom_chain(complete(1), 0, ChainVariant::plain);
  ASSERT_TRUE(chain);
  EXPECT_TRUE(chain->levels.empty());
  EXPECT_TRUE(is_valid_chain(complete(1), *chain, set_of({0})));
}

TEST(Chains, MatchDirectPredicateOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const SimpleGraph& g : isomorphism_classes(n)) {
      EXPECT_EQ(untransvectable_via_chains(g, ChainVariant::plain), untransvectable_vertices(g)) << to_dot(g);
      if (n >= 2 && is_strongly_reduced(g)) {
        EXPECT_EQ(untransvectable_via_chains(g, ChainVariant::thick), untransvectable_vertices(g)) << to_dot(g);
      }
      for (Vertex v = 0; v < n; ++v) {
        for (ChainVariant variant : {ChainVariant::plain, ChainVariant::thick}) {
          if (variant == ChainVariant::thick && (n < 2 || !is_strongly_reduced(g))) continue;
          if (const auto chain = find_zoom_chain(g, v, variant)) {
            EXPECT_TRUE(is_valid_chain(g, *chain, VertexSet::single(v)));
          }
        }
      }
    }
  }
}

TEST(Chains, ValidatorRejectsBrokenChains) {
  const SimpleGraph c5 = cycle(5);
  ZoomChain wrong_product{ChainVariant::plain, {ZoomLevel{std::nullopt, set_of({0, 1}), set_of({0})}}};
  EXPECT_FALSE(is_valid_chain(c5, wrong_product, set_of({0})));
  ZoomChain wrong_target{ChainVariant::plain, {ZoomLevel{std::nullopt, c5.star(0), set_of({0})}}};
  EXPECT_FALSE(is_valid_chain(c5, wrong_target, set_of({1})));
  ZoomChain missing_thick{ChainVariant::thick, {ZoomLevel{std::nullopt, c5.star(0), set_of({0})}}};
  EXPECT_FALSE(is_valid_chain(c5, missing_thick, set_of({0})));
}

TEST(Chains, ChainTypesAndParabolics) {
  const auto p = uniform_cyclic(cycle(5), 0);
  const auto chain = find_zoom_chain(p, 0, ChainVariant::plain);
  ASSERT_TRUE(chain);
  EXPECT_EQ(chain->types(p->graph()), (std::vector<VertexSet>{p->graph().vertices(), p->graph().star(0), set_of({0})}));
  EXPECT_EQ(chain->parabolics(p).size(), 3U);
  EXPECT_EQ(chain->last(p->graph()), set_of({0}));
}

TEST(LastFactor, NormalizerCondition) {
  const SimpleGraph c5 = cycle(5);
  EXPECT_TRUE(last_factor_normalizer_condition(c5, set_of({0})));
  // Edge {0,1} in C5: the sub-clique {0} has star {0,1,4}, not inside {0,1} ∪ ∅.
  EXPECT_FALSE(last_factor_normalizer_condition(c5, set_of({0, 1})));
  EXPECT_FALSE(last_factor_normalizer_condition(c5, VertexSet{}));
  EXPECT_FALSE(last_factor_normalizer_condition(c5, set_of({0, 2})));
}

TEST(Report, C5Star) {
  const auto p = uniform_cyclic(cycle(5), 0);
  const QPropertyReport r = q_property_report(Parabolic::standard(p, p->graph().star(0)));
  EXPECT_TRUE(r.maximal_product);
  EXPECT_FALSE(r.isolated_clique_type);
  EXPECT_EQ(r.clique_factor, Parabolic::standard(p, set_of({0})));
  EXPECT_FALSE(r.clique_factor_trivial);
  EXPECT_EQ(r.cofactors, (std::vector<Parabolic>{Parabolic::standard(p, set_of({0}))}));
}

TEST(Report, TrivialParabolic) {
  const auto p = uniform_cyclic(cycle(5), 0);
  const QPropertyReport r = q_property_report(Parabolic::standard(p, VertexSet{}));
  EXPECT_FALSE(r.maximal_product);
  EXPECT_FALSE(r.isolated_clique_type);
  EXPECT_TRUE(r.clique_factor_trivial);
  EXPECT_TRUE(r.special_subproducts.empty());
  EXPECT_TRUE(r.cofactors.empty());
  EXPECT_TRUE(r.factors.empty());
  EXPECT_TRUE(r.thick_free_factors.empty());
}

TEST(Report, SpecialnessBoundaryCases) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const SimpleGraph& g : isomorphism_classes(n)) {
      for_each_subset(g.vertices(), [&](VertexSet lambda) {
        EXPECT_FALSE(is_special_subproduct(g, lambda, lambda));
        EXPECT_EQ(is_special_subproduct(g, lambda, VertexSet{}), (lambda | g.orthogonal(lambda)) != g.vertices());
      });
    }
  }
}

TEST(Report, SingleVertexSubproductsOfAnEdge) {
  // K2 inside transvection-free graphs on up to six vertices: each single vertex is tested with the strict criterion.
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const SimpleGraph& g : isomorphism_classes(n)) {
      if (!is_transvection_free(g)) continue;
      for (auto [u, v] : g.edges()) {
        const VertexSet k2 = set_of({u, v});
        for (Vertex w : {u, v}) {
          const VertexSet s = VertexSet::single(w);
          const bool expected = !(s | g.orthogonal(s)).subset_of(k2 | g.orthogonal(k2));
          EXPECT_EQ(is_special_subproduct(g, k2, s), expected);
          // Transvection-freeness makes each single vertex of an edge special.
          EXPECT_TRUE(expected);
        }
      }
    }
  }
}

TEST(Report, ConsistencyOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const SimpleGraph& g : isomorphism_classes(n)) {
      const auto p = uniform_cyclic(g, 0);
      for_each_subset(g.vertices(), [&](VertexSet lambda) {
        const QPropertyReport r = q_property_report(Parabolic::standard(p, lambda));
        VertexSet covered = r.clique_factor.type();
        for (const Parabolic& f : r.factors) {
          if (f == r.clique_factor) continue;
          EXPECT_FALSE(f.type().intersects(covered));
          covered |= f.type();
        }
        EXPECT_EQ(covered, lambda);
        if (!r.cofactors.empty()) {
          VertexSet meet = lambda;
          for (const Parabolic& c : r.cofactors) meet &= c.type();
          EXPECT_EQ(meet, r.clique_factor.type());
        }
        for (const Parabolic& s : r.special_subproducts) EXPECT_TRUE(is_special_subproduct(g, lambda, s.type()));
        EXPECT_EQ(r.clique_factor_trivial, clique_factor(g, lambda).empty());
      });
    }
  }
}
