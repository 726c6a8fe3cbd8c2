#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace hyperkernel {

using vertex_id = std::int32_t;

// Hyperedge as a sorted list of 1 to 3 distinct vertices.
using edge = std::vector<vertex_id>;

// A hypergraph over an explicit, sorted vertex set. Identifiers are stable
// under reductions: removing a vertex never relabels the others.
//
// Construction rejects structurally broken input (edge cardinality outside
// 1..3, repeated vertex inside an edge, vertex not in the vertex set) but
// tolerates duplicate edges so that validate() can report them.
class hypergraph {
 public:
  hypergraph() = default;
  hypergraph(std::vector<vertex_id> vertices, std::vector<edge> edges);

  // Vertices 0..n-1.
  static hypergraph with_vertex_count(std::size_t n, std::vector<edge> edges);

  std::span<const vertex_id> vertices() const { return vertices_; }
  std::span<const edge> edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool contains(vertex_id v) const;
  // Position of v in vertices(); v must be contained.
  std::size_t index_of(vertex_id v) const;

  // Indices of the edges containing v (the incidence set E(v)).
  std::vector<std::size_t> incident_edges(vertex_id v) const;
  std::size_t degree(vertex_id v) const;
  std::size_t max_degree() const;

  bool is_uniform() const;  // every edge has exactly three vertices
  bool is_simple() const;   // no duplicate edges

  // Relabels to 0..n-1 preserving vertex order; edges canonically sorted.
  hypergraph compacted() const;
  // Same vertices, edges sorted lexicographically.
  hypergraph canonical() const;

  friend bool operator==(const hypergraph&, const hypergraph&) = default;

 private:
  std::vector<vertex_id> vertices_;
  std::vector<edge> edges_;
};

enum class problem_kind { vertex_cover, independent_set };

std::string_view to_string(problem_kind p);

// A parameterized instance; 0 <= k <= n.
struct instance {
  instance(hypergraph h, std::int64_t k, problem_kind problem);

  hypergraph graph;
  std::int64_t k;
  problem_kind problem;

  friend bool operator==(const instance&, const instance&) = default;
};

struct validation_report {
  bool uniform = true;
  bool simple = true;
  std::vector<std::pair<std::size_t, std::size_t>> duplicate_edges;  // index pairs i < j
  std::vector<vertex_id> isolated;
  std::size_t max_degree = 0;
};

validation_report validate(const hypergraph& h);

struct stripped {
  hypergraph graph;
  std::vector<vertex_id> removed;
};

stripped strip_isolated(const hypergraph& h);

struct unit_resolution {
  instance result;
  std::vector<vertex_id> forced;
};

// Repeatedly takes the vertex of a unit edge into the cover, deleting it and
// every edge through it. Throws error(parameter_exhausted) when more vertices
// are forced than k allows. Requires a vertex-cover instance.
unit_resolution resolve_unit_edges(const instance& inst);

struct domination {
  // (w, v): E(w) is a subset of E(v), w != v.
  std::vector<std::pair<vertex_id, vertex_id>> vertices;
  // (i, j): edge j is a strict subset of edge i.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

domination find_dominated(const hypergraph& h);

}  // namespace hyperkernel
