#include "hyperkernel/generators.hpp"
#include "hyperkernel/graph.hpp"
#include "hyperkernel/planarity.hpp"
#include "hyperkernel/rng.hpp"

#include "../support/brute_force.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace hyperkernel {
namespace {

using testing::fano;
using testing::single_edge;

TEST(IncidenceGraph, SingleEdgeIsStar) {
  const auto b = incidence_graph(single_edge());
  EXPECT_EQ(b.graph.num_vertices(), 4u);
  EXPECT_EQ(b.graph.num_edges(), 3u);
  const vertex_id vb = b.edge_vertex(0);
  EXPECT_EQ(b.sides[vb], side::v2);
  EXPECT_EQ(b.graph.degree(vb), 3u);
  for (vertex_id v = 0; v < 3; ++v) EXPECT_EQ(b.graph.degree(v), 1u);
}

TEST(IncidenceGraph, FanoIsHeawood) {
  const auto b = incidence_graph(fano());
  EXPECT_EQ(b.graph.num_vertices(), 14u);
  EXPECT_EQ(b.graph.num_edges(), 21u);
  for (vertex_id v : b.graph.vertices()) EXPECT_EQ(b.graph.degree(v), 3u);
}

TEST(IncidenceGraph, NoEdges) {
  const auto b = incidence_graph(hypergraph::with_vertex_count(3, {}));
  EXPECT_EQ(b.graph.num_vertices(), 3u);
  EXPECT_EQ(b.graph.num_edges(), 0u);
  EXPECT_EQ(std::count(b.sides.begin(), b.sides.end(), side::v2), 0);
}

TEST(LocalCompleteGraph, SingleEdgeIsK4) {
  const auto g = local_complete_graph(single_edge());
  EXPECT_EQ(g.graph, complete_graph(4));
  EXPECT_EQ(g.sides[3], side::v2);
}

TEST(LocalCompleteGraph, DisjointEdgesGiveTwoK4) {
  const auto g = local_complete_graph(testing::two_disjoint_edges());
  EXPECT_EQ(g.graph.num_vertices(), 8u);
  EXPECT_EQ(g.graph.num_edges(), 12u);
  for (vertex_id v : g.graph.vertices()) EXPECT_EQ(g.graph.degree(v), 3u);
  EXPECT_FALSE(g.graph.has_edge(0, 3));
}

TEST(LocalCompleteGraph, SharedPairAppearsOnce) {
  const auto h = hypergraph::with_vertex_count(4, {{0, 1, 2}, {0, 1, 3}});
  const auto g = local_complete_graph(h);
  std::size_t v1v1 = 0;
  for (auto [u, v] : g.graph.edge_list()) {
    if (g.sides[u] == side::v1 && g.sides[v] == side::v1) ++v1v1;
  }
  EXPECT_EQ(v1v1, 5u);
}

TEST(NeighborhoodPartition, PathSingleCenter) {
  const auto g = path_graph(4);  // a-b-c-d
  const vertex_id b = 1;
  const auto p = neighborhood_partition(g, std::span(&b, 1));
  EXPECT_EQ(p.n1, (std::vector<vertex_id>{2}));
  EXPECT_TRUE(p.n2.empty());
  EXPECT_EQ(p.n3, (std::vector<vertex_id>{0}));
}

TEST(NeighborhoodPartition, K4Center) {
  const auto g = complete_graph(4);
  const vertex_id a = 0;
  const auto p = neighborhood_partition(g, std::span(&a, 1));
  EXPECT_TRUE(p.n1.empty());
  EXPECT_TRUE(p.n2.empty());
  EXPECT_EQ(p.n3, (std::vector<vertex_id>{1, 2, 3}));
}

TEST(NeighborhoodPartition, PathPairCenter) {
  const auto g = path_graph(4);
  const std::vector<vertex_id> c{1, 2};
  const auto p = neighborhood_partition(g, c);
  EXPECT_TRUE(p.n1.empty());
  EXPECT_TRUE(p.n2.empty());
  EXPECT_EQ(p.n3, (std::vector<vertex_id>{0, 3}));
}

simple_graph random_graph(seeded_rng& rng, std::size_t n) {
  simple_graph g(n);
  const auto density = rng.between(1, 9);
  for (vertex_id u = 0; u < static_cast<vertex_id>(n); ++u) {
    for (vertex_id v = u + 1; v < static_cast<vertex_id>(n); ++v) {
      if (rng.between(0, 9) < density) g.add_edge(u, v);
    }
  }
  return g;
}

void check_partition(const simple_graph& g, std::span<const vertex_id> centers, const partition3& p) {
  std::set<vertex_id> open;
  for (vertex_id c : centers)
    for (vertex_id x : g.neighbors(c)) open.insert(x);
  for (vertex_id c : centers) open.erase(c);
  std::set<vertex_id> closed = open;
  closed.insert(centers.begin(), centers.end());

  std::multiset<vertex_id> all;
  all.insert(p.n1.begin(), p.n1.end());
  all.insert(p.n2.begin(), p.n2.end());
  all.insert(p.n3.begin(), p.n3.end());
  ASSERT_EQ(std::set<vertex_id>(all.begin(), all.end()), open);
  ASSERT_EQ(all.size(), open.size());  // disjoint

  // Recompute the definitions directly.
  for (vertex_id u : open) {
    bool outside = false;
    for (vertex_id x : g.neighbors(u)) outside |= !closed.count(x);
    const bool in1 = std::binary_search(p.n1.begin(), p.n1.end(), u);
    EXPECT_EQ(in1, outside);
    if (!outside) {
      bool touches_n1 = false;
      for (vertex_id x : g.neighbors(u)) touches_n1 |= std::binary_search(p.n1.begin(), p.n1.end(), x);
      EXPECT_EQ(std::binary_search(p.n2.begin(), p.n2.end(), u), touches_n1);
    }
  }
}

TEST(NeighborhoodPartition, DisjointCoverOnRandomGraphs) {
  seeded_rng rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(rng.between(2, 12));
    const auto g = random_graph(rng, n);
    for (vertex_id v = 0; v < static_cast<vertex_id>(n); ++v) {
      check_partition(g, std::span(&v, 1), neighborhood_partition(g, std::span(&v, 1)));
      for (vertex_id w = v + 1; w < static_cast<vertex_id>(n); ++w) {
        const std::vector<vertex_id> c{v, w};
        check_partition(g, c, neighborhood_partition(g, c));
      }
    }
  }
}

TEST(IncidenceGraph, BipartiteWithThreeMEdges) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto h = gen::random_uniform(9, 8, seed);
    const auto b = incidence_graph(h);
    EXPECT_EQ(b.graph.num_edges(), 3 * h.num_edges());
    for (auto [u, v] : b.graph.edge_list()) EXPECT_NE(b.sides[u] == side::v1, b.sides[v] == side::v1);
  }
}

TEST(LocalCompleteGraph, EdgeVertexNeighborhoodIsItsEdge) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto h = gen::random_uniform(9, 8, seed);
    const auto g = local_complete_graph(h);
    for (std::size_t j = 0; j < h.num_edges(); ++j) {
      const vertex_id vb = g.edge_vertex(j);
      std::vector<vertex_id> expected;
      for (vertex_id v : h.edges()[j]) expected.push_back(*g.graph_vertex(v));
      std::sort(expected.begin(), expected.end());
      const auto nb = g.graph.neighbors(vb);
      EXPECT_EQ(std::vector<vertex_id>(nb.begin(), nb.end()), expected);
      // Hence N(v_B) lies inside N[u] for every u in B.
      for (vertex_id u : expected)
        for (vertex_id x : nb) EXPECT_TRUE(x == u || g.graph.has_edge(u, x));
    }
  }
}

TEST(SimpleGraph, RejectsSelfLoopAndKeepsHoles) {
  simple_graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::exception);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.remove_vertex(1);
  EXPECT_FALSE(g.present(1));
  EXPECT_EQ(g.num_edges(), 0u);
  EXPECT_EQ(g.add_vertex(), 3);
  EXPECT_EQ(g.num_vertices(), 3u);
}

}  // namespace
}  // namespace hyperkernel
