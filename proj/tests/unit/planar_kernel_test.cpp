#include "hyperkernel/error.hpp"
#include "hyperkernel/generators.hpp"
#include "hyperkernel/oracles.hpp"
#include "hyperkernel/planar_kernel.hpp"

#include "../support/brute_force.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace hyperkernel {
namespace {

using testing::fano;
using testing::single_edge;

// All-black V1-tagged colouring of a plain graph.
colored_graph black(const simple_graph& g) {
  const std::size_t n = g.capacity();
  colored_graph cg;
  cg.graph = g;
  cg.colors.assign(n, color::black);
  cg.sides.assign(n, side::v1);
  cg.vertex_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) cg.vertex_of[i] = static_cast<vertex_id>(i);
  cg.edge_of.assign(n, -1);
  cg.origin.assign(n, -1);
  return cg;
}

std::vector<vertex_id> nbrs(const colored_graph& cg, vertex_id v) {
  const auto s = cg.graph.neighbors(v);
  return {s.begin(), s.end()};
}

TEST(InitColored, Examples) {
  const auto one = init_colored(single_edge());
  EXPECT_EQ(one.graph, complete_graph(4));
  EXPECT_EQ(one.sides[3], side::v2);
  for (vertex_id v = 0; v < 4; ++v) EXPECT_TRUE(one.is_black(v));

  const auto f = init_colored(fano());
  EXPECT_EQ(f.graph.num_vertices(), 14u);
  EXPECT_EQ(std::count(f.colors.begin(), f.colors.end(), color::black), 14);

  const auto two = init_colored(testing::two_disjoint_edges());
  EXPECT_EQ(two.graph.num_vertices(), 8u);
  EXPECT_EQ(two.graph.num_edges(), 12u);
}

TEST(InitColored, RejectsIsolatedOrNonUniform) {
  EXPECT_THROW(init_colored(hypergraph::with_vertex_count(4, {{0, 1, 2}})), error);
  EXPECT_THROW(init_colored(hypergraph::with_vertex_count(3, {{0, 1}})), error);
}

TEST(Rule1, SingleEdgeK4) {
  const auto r = apply_rule1(init_colored(single_edge()));
  EXPECT_TRUE(r.changed);
  EXPECT_EQ(r.graph.colors[3], color::white);
  EXPECT_EQ(std::count(r.graph.colors.begin(), r.graph.colors.end(), color::white), 3);
}

TEST(Rule1, AllWhiteUnchanged) {
  auto cg = init_colored(single_edge());
  std::fill(cg.colors.begin(), cg.colors.end(), color::white);
  const auto r = apply_rule1(cg);
  EXPECT_FALSE(r.changed);
  EXPECT_EQ(r.graph, cg);
}

TEST(Rule1, EdgeVerticesWhiteAfterFirstPass) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto h = gen::planar(4 + seed % 9, seed);
    const auto r = apply_rule1(init_colored(h));
    for (vertex_id x : r.graph.graph.vertices()) {
      if (r.graph.sides[x] == side::v2) EXPECT_EQ(r.graph.colors[x], color::white) << seed;
    }
  }
  const auto f = apply_rule1(init_colored(fano()));
  for (vertex_id x = 7; x < 14; ++x) EXPECT_EQ(f.graph.colors[x], color::white);
}

TEST(Rule2, PathRemovesLeaf) {
  const auto r = apply_rule2(black(path_graph(4)));
  ASSERT_TRUE(r.changed);
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_EQ(r.steps[0].centers, (std::vector<vertex_id>{1}));
  EXPECT_EQ(r.steps[0].removed, (std::vector<vertex_id>{0}));
  EXPECT_FALSE(r.graph.graph.present(0));
  const vertex_id gadget = 4;
  EXPECT_EQ(r.graph.sides[gadget], side::gadget);
  EXPECT_EQ(r.graph.colors[gadget], color::white);
  EXPECT_EQ(nbrs(r.graph, gadget), (std::vector<vertex_id>{1}));
}

TEST(Rule2, NoThirdNeighbourhoodUnchanged) {
  // A 5-cycle: every neighbour has a neighbour outside.
  simple_graph c5(5);
  for (vertex_id v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
  const auto r = apply_rule2(black(c5));
  EXPECT_FALSE(r.changed);
}

TEST(Rule2, StarCenter) {
  simple_graph star(4);
  for (vertex_id v = 1; v < 4; ++v) star.add_edge(0, v);
  const auto r = apply_rule2(black(star));
  ASSERT_TRUE(r.changed);
  EXPECT_EQ(r.steps[0].centers, (std::vector<vertex_id>{0}));
  EXPECT_EQ(r.steps[0].removed, (std::vector<vertex_id>{1, 2, 3}));
  EXPECT_EQ(nbrs(r.graph, 4), (std::vector<vertex_id>{0}));
}

TEST(Rule2, RepeatOnFixpointIsSkipped) {
  // After the star is reduced, the only N3 at the centre is its own gadget;
  // re-adding the same gadget would loop forever.
  simple_graph star(4);
  for (vertex_id v = 1; v < 4; ++v) star.add_edge(0, v);
  const auto once = apply_rule2(black(star));
  const auto twice = apply_rule2(once.graph);
  EXPECT_FALSE(twice.changed);
}

TEST(Rule3, TwoStarsSharingLeaves) {
  simple_graph g(5);
  for (vertex_id x = 2; x < 5; ++x) {
    g.add_edge(0, x);
    g.add_edge(1, x);
  }
  EXPECT_TRUE(pair_rule_guard(g, 0, 1));
  const auto r = apply_rule3(black(g));
  ASSERT_TRUE(r.changed);
  const auto& s = r.steps[0];
  EXPECT_EQ(s.centers, (std::vector<vertex_id>{0, 1}));
  EXPECT_EQ(s.removed, (std::vector<vertex_id>{2, 3, 4}));
  ASSERT_EQ(s.gadgets.size(), 2u);
  for (const auto& gd : s.gadgets) {
    EXPECT_EQ(gd.attached, (std::vector<vertex_id>{0, 1}));
    EXPECT_EQ(nbrs(r.graph, gd.id), (std::vector<vertex_id>{0, 1}));
    EXPECT_EQ(r.graph.colors[gd.id], color::white);
  }
}

TEST(Rule3, DominatedThirdNeighbourhoodUnchanged) {
  const auto r = apply_rule3(black(complete_graph(4)));
  EXPECT_FALSE(r.changed);
}

TEST(Rule3, PathPairGuard) {
  // a-b-c-d-e with centres b, d: N3 = {a, c, e} and no single vertex of
  // N2 u N3 is adjacent to all three, so the guard holds.
  const auto g = path_graph(5);
  EXPECT_TRUE(pair_rule_guard(g, 1, 3));
  const auto p = neighborhood_partition(g, std::vector<vertex_id>{1, 3});
  EXPECT_EQ(p.n3, (std::vector<vertex_id>{0, 2, 4}));

  // The first qualifying pair in identifier order is (a, d); case 2 fires.
  const auto r = apply_rule3(black(g));
  ASSERT_TRUE(r.changed);
  EXPECT_EQ(r.steps[0].centers, (std::vector<vertex_id>{0, 3}));
  EXPECT_EQ(r.steps[0].removed, (std::vector<vertex_id>{1, 2, 4}));
  ASSERT_EQ(r.steps[0].gadgets.size(), 2u);
  EXPECT_EQ(r.steps[0].gadgets[0].attached, (std::vector<vertex_id>{0}));
  EXPECT_EQ(r.steps[0].gadgets[1].attached, (std::vector<vertex_id>{3}));
}

TEST(Rule3, SelfDominatedGuardFails) {
  // (a, c) on the path: N3 = {b} and b dominates itself.
  EXPECT_FALSE(pair_rule_guard(path_graph(5), 0, 2));
}

TEST(Fixpoint, SingleEdge) {
  const auto f = reduce_fixpoint(init_colored(single_edge()));
  EXPECT_EQ(f.graph.colors[3], color::white);
  EXPECT_FALSE(apply_rule1(f.graph).changed);
  EXPECT_FALSE(apply_rule2(f.graph).changed);
  EXPECT_FALSE(apply_rule3(f.graph).changed);
}

TEST(Fixpoint, EmptyGraph) {
  const auto f = reduce_fixpoint(black(simple_graph{}));
  EXPECT_EQ(f.applications, 0u);
  EXPECT_TRUE(f.trace.steps.empty());
}

TEST(Fixpoint, DisjointComponentsReduceAlike) {
  const auto f = reduce_fixpoint(init_colored(testing::two_disjoint_edges()));
  const auto rebuilt = reconstruct_hypergraph(f.graph).graph;
  // Same shape on both halves.
  std::vector<std::size_t> sizes;
  for (const auto& e : rebuilt.edges()) sizes.push_back(e.size());
  ASSERT_EQ(sizes.size() % 2, 0u);
  std::size_t low = 0, high = 0;
  for (vertex_id v : rebuilt.vertices()) (v < 3 ? low : high) += 1;
  EXPECT_EQ(low, high);
  EXPECT_EQ(oracles::min_hitting_set(rebuilt).size, 2u);
}

TEST(Fixpoint, IterationCeiling) {
  std::vector<reduction_rule> extra{[](const colored_graph&) { return std::optional<trace_step>(trace_step{9}); }};
  try {
    reduce_fixpoint(init_colored(single_edge()), extra);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::iteration_ceiling);
  }
}

TEST(Fixpoint, ExtraRuleRuns) {
  int calls = 0;
  std::vector<reduction_rule> extra{[&](const colored_graph&) {
    ++calls;
    return std::optional<trace_step>{};
  }};
  reduce_fixpoint(init_colored(fano()), extra);
  EXPECT_GT(calls, 0);
}

TEST(Trace, SerializeParseRoundTrip) {
  reduction_trace t;
  t.steps.push_back({1, {0}, {}, {1, 2, 3}, {}});
  t.steps.push_back({2, {4}, {5, 6}, {}, {{7, {4}}}});
  t.steps.push_back({3, {1, 4}, {8}, {}, {{9, {1, 4}}, {10, {1, 4}}}});
  const auto text = serialize_trace(t);
  EXPECT_EQ(parse_trace(text), t);
  EXPECT_EQ(serialize_trace(parse_trace(text)), text);
  EXPECT_NE(text.find("gadgets=9:1,4;10:1,4"), std::string::npos);
}

TEST(Trace, ParseErrors) {
  EXPECT_THROW(parse_trace("rule=1 centers=0 removed= recolored=1\n"), error);
  EXPECT_THROW(parse_trace("rule=x centers=0 removed= recolored= gadgets=\n"), error);
  EXPECT_THROW(parse_trace("rule=2 centers=0 removed= recolored= gadgets=5\n"), error);
}

TEST(Trace, ReplayReproducesFixpoint) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto initial = init_colored(gen::planar(4 + seed % 9, seed));
    const auto f = reduce_fixpoint(initial);
    EXPECT_EQ(replay(initial, f.trace), f.graph);
    EXPECT_EQ(replay(initial, parse_trace(serialize_trace(f.trace))), f.graph);
    const auto again = reduce_fixpoint(initial);
    EXPECT_EQ(serialize_trace(again.trace), serialize_trace(f.trace));
  }
}

TEST(Trace, ReplayRejectsWrongGadgetId) {
  auto cg = black(path_graph(3));
  trace_step s{2, {1}, {0}, {}, {{7, {1}}}};
  EXPECT_THROW(apply_step(cg, s, 0), error);
}

TEST(Trace, VertexGrowthBoundedPerStep) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto cg = init_colored(gen::planar(4 + seed % 9, seed));
    const auto f = reduce_fixpoint(cg);
    for (std::size_t i = 0; i < f.trace.steps.size(); ++i) {
      const auto before = cg.graph.num_vertices();
      apply_step(cg, f.trace.steps[i], i);
      EXPECT_LE(cg.graph.num_vertices(), before + 2);
      EXPECT_LE(f.trace.steps[i].gadgets.size(), 2u);
    }
  }
}

TEST(Reconstruct, UntouchedGraphGivesOriginal) {
  const auto h = fano();
  const auto r = reconstruct_hypergraph(init_colored(h));
  EXPECT_EQ(r.graph.canonical(), h.canonical());
  EXPECT_TRUE(r.gadget_edges.empty());
}

TEST(Reconstruct, GadgetBecomesUnitEdge) {
  // Gadget hanging off vertex 0 of a single edge.
  auto cg = init_colored(single_edge());
  apply_step(cg, trace_step{2, {0}, {}, {}, {{4, {0}}}}, 0);
  const auto r = reconstruct_hypergraph(cg);
  ASSERT_EQ(r.gadget_edges.size(), 1u);
  EXPECT_EQ(r.gadget_edges[0], (edge{0}));
  EXPECT_NE(std::find(r.graph.edges().begin(), r.graph.edges().end(), edge{0}), r.graph.edges().end());
}

TEST(Reconstruct, SingleEdgeFixpointKeepsCoverNumber) {
  const auto f = reduce_fixpoint(init_colored(single_edge()));
  EXPECT_EQ(oracles::min_hitting_set(reconstruct_hypergraph(f.graph).graph).size, 1u);
}

bool implied(const kernel_outcome& o) {
  if (auto* d = std::get_if<decided>(&o)) return d->value == answer::yes;
  const auto& k = std::get<kernel>(o);
  return static_cast<std::int64_t>(oracles::min_hitting_set(k.reduced.graph).size) <= k.reduced.k;
}

TEST(PlanarKernel, SingleEdge) {
  EXPECT_TRUE(implied(kernelize_planar_vc(instance(single_edge(), 1, problem_kind::vertex_cover))));
  EXPECT_FALSE(implied(kernelize_planar_vc(instance(single_edge(), 0, problem_kind::vertex_cover))));
}

TEST(PlanarKernel, RejectsNonPlanar) {
  try {
    kernelize_planar_vc(instance(fano(), 3, problem_kind::vertex_cover));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_planar);
  }
}

TEST(PlanarKernel, StatsCarryClaim) {
  const auto o = kernelize_planar_vc(instance(gen::planar(8, 3), 4, problem_kind::vertex_cover));
  if (auto* k = std::get_if<kernel>(&o)) {
    EXPECT_FALSE(k->stats.bound_asserted);
    EXPECT_EQ(k->stats.bound_claimed, planar_kernel_factor * k->reduced.k);
    EXPECT_FALSE(k->stats.note.empty());
  }
}

TEST(PlanarKernel, PreservesAnswerAndNeverGrows) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const std::size_t n = 4 + seed % 9;
    const auto h = gen::planar(n, seed);
    const auto tau = static_cast<std::int64_t>(oracles::min_hitting_set(h).size);
    for (std::int64_t k : {tau - 1, tau}) {
      if (k < 0) continue;
      const auto o = kernelize_planar_vc(instance(h, k, problem_kind::vertex_cover));
      EXPECT_EQ(implied(o), tau <= k) << "seed " << seed << " k " << k;
      if (auto* kk = std::get_if<kernel>(&o)) {
        EXPECT_LE(kk->reduced.graph.num_vertices(), h.num_vertices());
        EXPECT_LE(kk->reduced.graph.num_edges(), h.num_edges());
        EXPECT_LE(kk->reduced.k, k);
      }
    }
  }
}

TEST(InducedMatchingTransform, SingleEdge) {
  const induced_matching_transform t(single_edge());
  const std::vector<vertex_id> i{0};
  const auto m = t.forward(i);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0], std::make_pair(vertex_id{0}, vertex_id{3}));
  EXPECT_EQ(t.backward(m), i);
}

TEST(InducedMatchingTransform, FanoSizesAgree) {
  const induced_matching_transform t(fano());
  EXPECT_EQ(oracles::max_induced_matching(t.graph().graph).size, 1u);
  EXPECT_EQ(oracles::max_strong_independent_set(fano()).size, 1u);
}

TEST(InducedMatchingTransform, TwoDisjointEdges) {
  const induced_matching_transform t(testing::two_disjoint_edges());
  const std::vector<vertex_id> i{0, 3};
  const auto m = t.forward(i);
  EXPECT_EQ(m.size(), 2u);
  EXPECT_TRUE(oracles::is_induced_matching(t.graph().graph, m));
  EXPECT_EQ(t.backward(m), i);
}

TEST(InducedMatchingTransform, UnmatchableVertex) {
  // Two members sharing their only edge cannot both be matched.
  const induced_matching_transform t(single_edge());
  const std::vector<vertex_id> i{0, 1};
  try {
    t.forward(i);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::unmatchable_vertex);
  }
}

TEST(InducedMatchingTransform, RoundTripOnCorpus) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const auto h = gen::random_uniform(4 + seed % 6, 1 + seed % 8, seed);
    const induced_matching_transform t(h);
    const auto is = oracles::max_strong_independent_set(h);
    const auto im = oracles::max_induced_matching(t.graph().graph);
    EXPECT_EQ(im.size, is.size) << seed;
    const auto m = t.forward(is.witness);
    EXPECT_EQ(m.size(), is.size);
    EXPECT_TRUE(oracles::is_induced_matching(t.graph().graph, m));
    const auto back = t.backward(im.witness);
    EXPECT_EQ(back.size(), im.size);
    EXPECT_TRUE(oracles::is_strong_independent_set(h, back));
  }
}

}  // namespace
}  // namespace hyperkernel
