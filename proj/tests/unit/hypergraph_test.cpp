#include "hyperkernel/error.hpp"
#include "hyperkernel/generators.hpp"
#include "hyperkernel/hypergraph.hpp"
#include "hyperkernel/rng.hpp"

#include "../support/brute_force.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace hyperkernel {
namespace {

using testing::brute_min_hitting_set;
using testing::fano;
using testing::single_edge;

TEST(Validate, SingleEdgeIsSmallestLegalInstance) {
  const auto r = validate(single_edge());
  EXPECT_TRUE(r.uniform);
  EXPECT_TRUE(r.simple);
  EXPECT_TRUE(r.isolated.empty());
  EXPECT_EQ(r.max_degree, 1u);
}

TEST(Validate, FanoHasDegreeThree) {
  const auto h = fano();
  const auto r = validate(h);
  EXPECT_TRUE(r.uniform);
  EXPECT_TRUE(r.simple);
  // Every point of the Fano plane lies on three lines.
  for (vertex_id v : h.vertices()) EXPECT_EQ(h.degree(v), 3u);
  EXPECT_EQ(r.max_degree, 3u);
}

TEST(Validate, ReportsDuplicateEdge) {
  const auto h = hypergraph::with_vertex_count(3, {{0, 1, 2}, {2, 1, 0}});
  const auto r = validate(h);
  EXPECT_FALSE(r.simple);
  ASSERT_EQ(r.duplicate_edges.size(), 1u);
  EXPECT_EQ(r.duplicate_edges[0], std::make_pair(std::size_t{0}, std::size_t{1}));
}

TEST(Validate, ReportsNonUniformAndIsolated) {
  const auto h = hypergraph::with_vertex_count(4, {{0, 1}});
  const auto r = validate(h);
  EXPECT_FALSE(r.uniform);
  EXPECT_EQ(r.isolated, (std::vector<vertex_id>{2, 3}));
}

TEST(Hypergraph, RejectsBrokenEdges) {
  EXPECT_THROW(hypergraph::with_vertex_count(3, {{0, 1, 5}}), error);
  EXPECT_THROW(hypergraph::with_vertex_count(4, {{0, 1, 2, 3}}), error);
  EXPECT_THROW(hypergraph::with_vertex_count(3, {{0, 0, 1}}), error);
  EXPECT_THROW(hypergraph::with_vertex_count(3, {{}}), error);
}

TEST(Instance, ParameterRange) {
  EXPECT_THROW(instance(single_edge(), -1, problem_kind::vertex_cover), error);
  EXPECT_THROW(instance(single_edge(), 4, problem_kind::vertex_cover), error);
  EXPECT_NO_THROW(instance(single_edge(), 3, problem_kind::vertex_cover));
}

TEST(StripIsolated, RemovesDegreeZeroVertices) {
  const auto h = hypergraph::with_vertex_count(4, {{0, 1, 2}});
  const auto s = strip_isolated(h);
  EXPECT_EQ(s.removed, (std::vector<vertex_id>{3}));
  EXPECT_EQ(s.graph.num_vertices(), 3u);
  EXPECT_EQ(s.graph.num_edges(), 1u);
}

TEST(StripIsolated, FanoUnchanged) {
  const auto s = strip_isolated(fano());
  EXPECT_TRUE(s.removed.empty());
  EXPECT_EQ(s.graph, fano());
}

TEST(StripIsolated, EmptyHypergraphLosesEverything) {
  const auto s = strip_isolated(hypergraph::with_vertex_count(3, {}));
  EXPECT_EQ(s.removed.size(), 3u);
  EXPECT_EQ(s.graph.num_vertices(), 0u);
}

TEST(ResolveUnitEdges, ForcesUnitVertex) {
  // {v},{v,a,b} with v=0.
  const auto h = hypergraph::with_vertex_count(3, {{0}, {0, 1, 2}});
  const auto r = resolve_unit_edges(instance(h, 1, problem_kind::vertex_cover));
  EXPECT_EQ(r.forced, (std::vector<vertex_id>{0}));
  EXPECT_EQ(r.result.k, 0);
  EXPECT_EQ(r.result.graph.num_edges(), 0u);
}

TEST(ResolveUnitEdges, ExhaustsParameter) {
  const auto h = hypergraph::with_vertex_count(2, {{0}, {1}});
  try {
    resolve_unit_edges(instance(h, 1, problem_kind::vertex_cover));
    FAIL() << "expected ParameterExhausted";
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::parameter_exhausted);
  }
}

TEST(ResolveUnitEdges, UniformInputUnchanged) {
  const instance inst(fano(), 3, problem_kind::vertex_cover);
  const auto r = resolve_unit_edges(inst);
  EXPECT_TRUE(r.forced.empty());
  EXPECT_EQ(r.result, inst);
}

TEST(ResolveUnitEdges, RejectsIndependentSet) {
  EXPECT_THROW(resolve_unit_edges(instance(fano(), 1, problem_kind::independent_set)), error);
}

// Random hypergraphs with mixed edge sizes on <= 8 vertices.
hypergraph random_mixed(seeded_rng& rng) {
  const auto n = static_cast<std::size_t>(rng.between(1, 8));
  const auto m = static_cast<std::size_t>(rng.between(0, 10));
  std::vector<edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    const auto size = static_cast<std::size_t>(rng.between(1, std::min<std::int64_t>(3, static_cast<std::int64_t>(n))));
    std::vector<vertex_id> pool(n);
    for (std::size_t v = 0; v < n; ++v) pool[v] = static_cast<vertex_id>(v);
    rng.shuffle(pool);
    edge e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(e.begin(), e.end());
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  return hypergraph::with_vertex_count(n, std::move(edges));
}

TEST(HypercoreProperties, SimplificationsPreserveDecision) {
  seeded_rng rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const auto h = random_mixed(rng);
    const auto tau = brute_min_hitting_set(h);

    const auto s = strip_isolated(h);
    EXPECT_EQ(brute_min_hitting_set(s.graph), tau);

    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(h.num_vertices()); ++k) {
      const bool original = static_cast<std::int64_t>(tau) <= k;
      try {
        const auto r = resolve_unit_edges(instance(h, k, problem_kind::vertex_cover));
        const bool reduced = static_cast<std::int64_t>(brute_min_hitting_set(r.result.graph)) <= r.result.k;
        EXPECT_EQ(original, reduced) << "trial " << trial << " k=" << k;
        // Idempotent.
        EXPECT_EQ(resolve_unit_edges(r.result).result, r.result);
        EXPECT_TRUE(resolve_unit_edges(r.result).forced.empty());
      } catch (const error& e) {
        ASSERT_EQ(e.code(), errc::parameter_exhausted);
        EXPECT_FALSE(original) << "trial " << trial << " k=" << k;
      }
    }
  }
}

TEST(FindDominated, StrictSubsetEdge) {
  // {a,b,c},{a,b}
  const auto h = hypergraph::with_vertex_count(3, {{0, 1, 2}, {0, 1}});
  const auto d = find_dominated(h);
  ASSERT_EQ(d.edges.size(), 1u);
  EXPECT_EQ(d.edges[0], std::make_pair(std::size_t{0}, std::size_t{1}));
}

TEST(FindDominated, EqualIncidenceIsMutual) {
  // {a,b,c},{a,d,e}: E(b) = E(c) = {B1}, E(d) = E(e) = {B2}, E(a) = both.
  const auto d = find_dominated(testing::fan_pair());
  auto has = [&](vertex_id w, vertex_id v) {
    return std::find(d.vertices.begin(), d.vertices.end(), std::make_pair(w, v)) != d.vertices.end();
  };
  EXPECT_TRUE(has(2, 1));
  EXPECT_TRUE(has(1, 2));
  EXPECT_TRUE(has(3, 4));
  EXPECT_TRUE(has(1, 0));
  EXPECT_FALSE(has(0, 1));
  EXPECT_FALSE(has(1, 3));
  EXPECT_EQ(d.vertices.size(), 8u);
  EXPECT_TRUE(d.edges.empty());
}

TEST(FindDominated, FanoHasNone) {
  const auto d = find_dominated(fano());
  EXPECT_TRUE(d.vertices.empty());
  EXPECT_TRUE(d.edges.empty());
}

TEST(FindDominated, IrreflexiveAndSymmetricOnTies) {
  seeded_rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = random_mixed(rng);
    const auto d = find_dominated(h);
    for (auto [w, v] : d.vertices) {
      EXPECT_NE(w, v);
      if (h.incident_edges(w) == h.incident_edges(v)) {
        EXPECT_NE(std::find(d.vertices.begin(), d.vertices.end(), std::make_pair(v, w)), d.vertices.end());
      }
    }
  }
}

}  // namespace
}  // namespace hyperkernel
