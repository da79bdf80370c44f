#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "grprod/complexes.hpp"
#include "grprod/error.hpp"
#include "grprod/oracle.hpp"
#include "support.hpp"

using namespace grprod;
using namespace grprod::test;

namespace {

SimpleGraph k3() { return complete(3); }
SimpleGraph p4() { return path({"a", "b", "c", "d"}); }

ComplexOptions syllable_metric() {
  ComplexOptions o;
  o.metric = BallMetric::syllable_count;
  return o;
}

// Random letter bijection of Z/n fixing the identity.
LetterMap random_table(std::mt19937_64& rng, std::int64_t n) {
  std::vector<std::int64_t> values;
  for (std::int64_t k = 1; k < n; ++k) values.push_back(k);
  std::shuffle(values.begin(), values.end(), rng);
  LetterMap m;
  for (std::int64_t k = 1; k < n; ++k) m[Letter::power(k)] = Letter::power(values[static_cast<std::size_t>(k - 1)]);
  return m;
}

void expect_extension_isomorphism(const CombinedBijection& theta, const ExtensionBall& src, const ExtensionBall& dst) {
  ASSERT_EQ(src.nodes.size(), dst.nodes.size());
  ASSERT_EQ(src.edges.size(), dst.edges.size());
  std::vector<std::size_t> image(src.nodes.size());
  std::set<std::size_t> hit;
  for (std::size_t i = 0; i < src.nodes.size(); ++i) {
    const Parabolic q = theta.apply(src.nodes[i]);
    const auto it = std::find(dst.nodes.begin(), dst.nodes.end(), q);
    ASSERT_NE(it, dst.nodes.end());
    EXPECT_EQ(q.type(), src.nodes[i].type());
    image[i] = static_cast<std::size_t>(it - dst.nodes.begin());
    hit.insert(image[i]);
  }
  EXPECT_EQ(hit.size(), dst.nodes.size());
  const std::set<std::pair<std::size_t, std::size_t>> dst_edges(dst.edges.begin(), dst.edges.end());
  for (auto [i, j] : src.edges) {
    const auto a = std::min(image[i], image[j]);
    const auto b = std::max(image[i], image[j]);
    EXPECT_TRUE(dst_edges.contains({a, b}));
  }
}

void expect_building_isomorphism(const CombinedBijection& theta, const BuildingBall& src, const BuildingBall& dst) {
  ASSERT_EQ(src.vertices.size(), dst.vertices.size());
  ASSERT_EQ(src.edges.size(), dst.edges.size());
  ASSERT_EQ(src.cubes.size(), dst.cubes.size());
  std::vector<std::size_t> image(src.vertices.size());
  for (std::size_t i = 0; i < src.vertices.size(); ++i) {
    const CliqueCoset c = theta.apply(src.vertices[i]);
    const auto j = dst.find(c);
    ASSERT_TRUE(j.has_value());
    EXPECT_EQ(dst.vertices[*j].rank(), src.vertices[i].rank());
    EXPECT_EQ(dst.vertices[*j].type, src.vertices[i].type);
    image[i] = *j;
  }
  EXPECT_EQ(std::set<std::size_t>(image.begin(), image.end()).size(), dst.vertices.size());
  const std::set<std::pair<std::size_t, std::size_t>> dst_edges(dst.edges.begin(), dst.edges.end());
  for (auto [i, j] : src.edges) EXPECT_TRUE(dst_edges.contains({image[i], image[j]}));
  const std::set<Cube> dst_cubes(dst.cubes.begin(), dst.cubes.end());
  for (const Cube& c : src.cubes) EXPECT_TRUE(dst_cubes.contains(Cube{image[c.bottom], image[c.top], c.dimension}));
}

}  // namespace

TEST(Extension, SpecExamples) {
  for (std::size_t r = 0; r <= 3; ++r) {
    const auto b = extension_ball(uniform_cyclic(edge_ab(), 2), r);
    EXPECT_EQ(b.nodes.size(), 2U);
    EXPECT_EQ(b.edges.size(), 1U);
  }
  const auto dihedral = uniform_cyclic(free_ab(), 2);
  const auto b1 = extension_ball(dihedral, 1);
  EXPECT_EQ(b1.nodes.size(), 4U);
  EXPECT_TRUE(b1.edges.empty());
  const oracle::BallOracle o(dihedral, 1);
  for (std::size_t i = 0; i < b1.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < b1.nodes.size(); ++j) {
      EXPECT_FALSE(o.commute(b1.nodes[i].conjugator(), b1.nodes[i].type().front(), b1.nodes[j].conjugator(),
                             b1.nodes[j].type().front()));
    }
  }
  const auto c5 = uniform_cyclic(cycle(5), 2);
  const auto base = extension_ball(c5, 0);
  EXPECT_EQ(base.nodes.size(), 5U);
  EXPECT_EQ(base.edges.size(), 5U);
}

TEST(Extension, AdjacencyMatchesBruteForceCommuting) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 25; ++i) {
    std::vector<VertexLabel> labels;
    const std::size_t n = 2 + rng() % 3;
    for (std::size_t k = 0; k < n; ++k) labels.push_back(VertexLabel::cyclic(2 + static_cast<std::int64_t>(rng() % 2)));
    const auto p = Presentation::make(random_graph(rng, n), labels);
    const auto b = extension_ball(p, 2);
    const oracle::BallOracle o(p, 0);
    const std::set<std::pair<std::size_t, std::size_t>> edges(b.edges.begin(), b.edges.end());
    for (std::size_t x = 0; x < b.nodes.size(); ++x) {
      for (std::size_t y = x + 1; y < b.nodes.size(); ++y) {
        const bool brute = o.commute(b.nodes[x].conjugator(), b.nodes[x].type().front(), b.nodes[y].conjugator(),
                                     b.nodes[y].type().front());
        EXPECT_EQ(edges.contains({x, y}), brute);
      }
    }
  }
}

TEST(Extension, Untransvectable) {
  const auto c5 = uniform_cyclic(cycle(5), 2);
  const auto full = extension_ball(c5, 2);
  const auto ue = untransvectable_extension_ball(c5, 2);
  EXPECT_EQ(ue.nodes, full.nodes);
  EXPECT_EQ(ue.edges, full.edges);
  for (std::size_t r = 0; r <= 2; ++r) EXPECT_TRUE(untransvectable_extension_ball(uniform_cyclic(k3(), 2), r).nodes.empty());
  const auto p = uniform_cyclic(p4(), 2);
  const auto up = untransvectable_extension_ball(p, 2);
  EXPECT_FALSE(up.nodes.empty());
  for (const Parabolic& q : up.nodes) EXPECT_TRUE(set_of({1, 2}).contains(q.type().front()));
}

TEST(Extension, RequiresEnumerableLabels) {
  EXPECT_THROW((void)extension_ball(uniform_cyclic(cycle(5), 0), 1), EnumerationError);
  ComplexOptions o;
  o.allow_infinite_labels = true;
  EXPECT_EQ(extension_ball(uniform_cyclic(cycle(5), 0), 0, o).nodes.size(), 5U);
}

TEST(Building, EdgeGraphCounts) {
  const auto b = building_ball(uniform_cyclic(edge_ab(), 2), 2);
  EXPECT_EQ(b.vertices.size(), 9U);
  EXPECT_EQ(b.count_rank(0), 4U);
  EXPECT_EQ(b.count_rank(1), 4U);
  EXPECT_EQ(b.count_rank(2), 1U);
  EXPECT_EQ(b.edges.size(), 12U);
  EXPECT_EQ(b.count_cubes(2), 4U);
}

TEST(Building, SingleVertex) {
  const auto p = uniform_cyclic(SimpleGraph({"a"}, std::vector<SimpleGraph::Edge>{}), 3);
  const auto b = building_ball(p, 1);
  EXPECT_EQ(b.vertices.size(), 4U);
  EXPECT_EQ(b.count_rank(0), 3U);
  EXPECT_EQ(b.count_rank(1), 1U);
  EXPECT_EQ(b.edges.size(), 3U);
}

TEST(Building, FundamentalDomainHasOneVertexPerClique) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 20; ++i) {
    const auto p = uniform_cyclic(random_graph(rng, 1 + rng() % 6), 2);
    const auto b = building_ball(p, 0);
    EXPECT_EQ(b.vertices.size(), cliques(p->graph()).size());
    for (const CliqueCoset& c : b.vertices) EXPECT_TRUE(c.representative.is_identity());
  }
}

TEST(Building, TranslatesOfTheFundamentalDomainTileFiniteGroups) {
  // Triangle with Z/2 and Z/3 labels: a finite group of order 18.
  const auto p = Presentation::make(k3(), {VertexLabel::cyclic(2), VertexLabel::cyclic(3), VertexLabel::cyclic(3)});
  const auto group = ball(p, 20);
  ASSERT_EQ(group.size(), 18U);
  const auto b = building_ball(p, 20);
  std::set<CliqueCoset> tiled;
  for (const Element& g : group) {
    for (VertexSet c : cliques(p->graph())) tiled.insert(clique_coset(g, c));
  }
  EXPECT_EQ(tiled.size(), b.vertices.size());
  for (VertexSet c : cliques(p->graph())) {
    std::size_t order = 1;
    for (Vertex v : c) order *= *p->label(v).finite_order();
    const auto count = std::count_if(b.vertices.begin(), b.vertices.end(), [c](const CliqueCoset& x) { return x.type == c; });
    EXPECT_EQ(static_cast<std::size_t>(count), 18 / order);
  }
  EXPECT_EQ(b.count_rank(0), 18U);
}

TEST(Building, CubesAreIntervals) {
  const auto p = uniform_cyclic(complete(3), 2);
  const auto b = building_ball(p, 3);
  // One 3-cube per group element, all sharing the top vertex.
  EXPECT_EQ(b.count_cubes(3), 8U);
  EXPECT_EQ(b.count_rank(3), 1U);
  for (const Cube& c : b.cubes) {
    EXPECT_TRUE(b.vertices[c.bottom].type.proper_subset_of(b.vertices[c.top].type));
    EXPECT_EQ(b.vertices[c.top].rank() - b.vertices[c.bottom].rank(), c.dimension);
  }
}

TEST(Bijection, RejectsInvalidTables) {
  const auto a = uniform_cyclic(free_ab(), 3);
  const auto b = uniform_cyclic(free_ab(), 4);
  EXPECT_THROW(CombinedBijection(a, b, {{}, {}}), InputError);
  LetterMap collide{{Letter::power(1), Letter::power(1)}, {Letter::power(-1), Letter::power(1)}};
  EXPECT_THROW(CombinedBijection(a, a, {collide, {}}), InputError);
  LetterMap moves_identity{{Letter{}, Letter::power(1)}};
  EXPECT_THROW(CombinedBijection(a, a, {moves_identity, {}}), InputError);
  EXPECT_THROW(CombinedBijection(a, uniform_cyclic(edge_ab(), 3), {{}, {}}), InputError);
}

TEST(Bijection, IdentityTablesGiveIdentity) {
  const auto p = uniform_cyclic(cycle(5), 3);
  const CombinedBijection id(p, p, std::vector<LetterMap>(5));
  std::mt19937_64 rng(53);
  for (int i = 0; i < 50; ++i) {
    const Element x = random_element(rng, p, 8);
    EXPECT_EQ(id.apply(x), x);
  }
}

TEST(Bijection, SwapOnTwoIsolatedZ3) {
  const auto p = uniform_cyclic(free_ab(), 3);
  LetterMap swap{{Letter::power(1), Letter::power(-1)}, {Letter::power(-1), Letter::power(1)}};
  const CombinedBijection theta(p, p, {swap, {}});
  const auto opts = syllable_metric();
  expect_extension_isomorphism(theta, extension_ball(p, 3, opts), extension_ball(p, 3, opts));
  expect_building_isomorphism(theta, building_ball(p, 3, opts), building_ball(p, 3, opts));
  std::mt19937_64 rng(54);
  for (int i = 0; i < 50; ++i) {
    const Element x = random_element(rng, p, 8);
    EXPECT_EQ(theta.inverse().apply(theta.apply(x)), x);
  }
}

TEST(Bijection, RandomTablesGiveIsomorphisms) {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 6; ++i) {
    const SimpleGraph g = random_graph(rng, 2 + rng() % 3);
    std::vector<VertexLabel> src_labels;
    std::vector<LetterMap> tables;
    for (std::size_t v = 0; v < g.size(); ++v) {
      const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 3);
      src_labels.push_back(VertexLabel::cyclic(n));
      tables.push_back(random_table(rng, n));
    }
    const auto p = Presentation::make(g, src_labels);
    const CombinedBijection theta(p, p, tables);
    const auto opts = syllable_metric();
    expect_extension_isomorphism(theta, extension_ball(p, 2, opts), extension_ball(p, 2, opts));
    expect_building_isomorphism(theta, building_ball(p, 2, opts), building_ball(p, 2, opts));
  }
}

TEST(Dot, RankAttributes) {
  const auto p = uniform_cyclic(edge_ab(), 2);
  const std::string dot = to_dot(building_ball(p, 1), *p);
  EXPECT_NE(dot.find("rank=2"), std::string::npos);
  EXPECT_EQ(dot, to_dot(building_ball(p, 1), *p));
}
