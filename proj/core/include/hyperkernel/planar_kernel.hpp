#pragma once

#include "hyperkernel/graph.hpp"
#include "hyperkernel/hypergraph.hpp"
#include "hyperkernel/kernels.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyperkernel {

enum class color { black, white };

// Local complete graph under dominating-set reduction. White vertices may not
// join the dominating set but still have to be dominated.
struct colored_graph {
  simple_graph graph;
  std::vector<color> colors;
  std::vector<side> sides;
  std::vector<vertex_id> vertex_of;     // hypergraph vertex for V1, else -1
  std::vector<std::ptrdiff_t> edge_of;  // hyperedge index for V2, else -1
  std::vector<std::ptrdiff_t> origin;   // trace step that created a gadget, else -1

  bool is_black(vertex_id v) const { return graph.present(v) && colors[v] == color::black; }

  friend bool operator==(const colored_graph&, const colored_graph&) = default;
};

struct gadget_record {
  vertex_id id;
  std::vector<vertex_id> attached;

  friend bool operator==(const gadget_record&, const gadget_record&) = default;
};

// One rule application. Rule 1 logs one step per recolouring centre.
struct trace_step {
  int rule = 0;
  std::vector<vertex_id> centers;
  std::vector<vertex_id> removed;
  std::vector<vertex_id> recolored;
  std::vector<gadget_record> gadgets;

  friend bool operator==(const trace_step&, const trace_step&) = default;
};

struct reduction_trace {
  std::vector<trace_step> steps;

  friend bool operator==(const reduction_trace&, const reduction_trace&) = default;
};

// Line format, one step per line:
//   rule=<id> centers=<a,b> removed=<...> recolored=<...> gadgets=<id:a,b;id:a>
std::string serialize_trace(const reduction_trace& trace);
reduction_trace parse_trace(std::string_view text);

// Executes a logged step. Gadget identifiers must match the next free ids.
void apply_step(colored_graph& cg, const trace_step& step, std::size_t step_index);
colored_graph replay(colored_graph initial, const reduction_trace& trace);

// Black local complete graph; requires a simple 3-uniform hypergraph
// without isolated vertices.
colored_graph init_colored(const hypergraph& h);

struct rule_result {
  colored_graph graph;
  bool changed = false;
  std::vector<trace_step> steps;
};

// One pass in identifier order: every black x in N2(v) u N3(v) of a still
// black centre v turns white.
rule_result apply_rule1(colored_graph cg);

// Single-vertex rule at the first black v with N3(v) nonempty.
rule_result apply_rule2(colored_graph cg);

// Pair rule at the first black pair (v, w) passing the guard.
rule_result apply_rule3(colored_graph cg);

// Planned application of the single-vertex rule at v, if it fires and
// changes the graph.
std::optional<trace_step> plan_single_rule(const colored_graph& cg, vertex_id v);

// True iff N3(v,w) is nonempty and no single vertex of N2(v,w) u N3(v,w)
// dominates it.
bool pair_rule_guard(const simple_graph& g, vertex_id v, vertex_id w);
std::optional<trace_step> plan_pair_rule(const colored_graph& cg, vertex_id v, vertex_id w);

// Additional rules plug in here: return the step to apply, or nullopt.
using reduction_rule = std::function<std::optional<trace_step>(const colored_graph&)>;

struct fixpoint_result {
  colored_graph graph;
  reduction_trace trace;
  std::size_t applications = 0;
};

// Loops rule 1 pass, one rule 2, one rule 3, then each extra rule once,
// until a full cycle changes nothing. Throws error(iteration_ceiling) after
// 10*|V|^2 applications.
fixpoint_result reduce_fixpoint(colored_graph cg, std::span<const reduction_rule> extra = {});

struct reconstruction {
  hypergraph graph;
  std::vector<edge> gadget_edges;  // edges contributed by gadget vertices
};

// Drops white V1 vertices and V1-V1 edges; every remaining V2 or gadget
// vertex becomes the edge of its surviving V1 neighbours.
reconstruction reconstruct_hypergraph(const colored_graph& cg);

struct planar_run {
  kernel_outcome outcome;
  colored_graph initial;
  fixpoint_result fixpoint;
  reconstruction rebuilt;
};

inline constexpr std::int64_t planar_kernel_factor = 67;

// Vertex cover on a planar 3-uniform hypergraph without isolated vertices.
// Throws error(not_planar) when the incidence graph is not planar.
kernel_outcome kernelize_planar_vc(const instance& inst);
planar_run kernelize_planar_vc_traced(const instance& inst);

// Strong independent sets of H against induced matchings of its local
// complete graph.
class induced_matching_transform {
 public:
  explicit induced_matching_transform(const hypergraph& h);

  const tagged_graph& graph() const { return graph_; }

  // Pairs each member of I with a distinct incident hyperedge vertex.
  // Throws error(unmatchable_vertex) when a member has no hyperedge left.
  std::vector<std::pair<vertex_id, vertex_id>> forward(std::span<const vertex_id> independent) const;

  // V1 endpoint of every V1-V2 matching edge, as hypergraph vertices.
  std::vector<vertex_id> backward(std::span<const std::pair<vertex_id, vertex_id>> matching) const;

 private:
  hypergraph source_;
  tagged_graph graph_;
};

}  // namespace hyperkernel
