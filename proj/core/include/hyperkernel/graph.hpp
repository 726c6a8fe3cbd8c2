#pragma once

#include "hyperkernel/hypergraph.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hyperkernel {

// Undirected simple graph with stable vertex identifiers. Removed vertices
// leave a hole; new vertices always get a fresh identifier.
class simple_graph {
 public:
  simple_graph() = default;
  explicit simple_graph(std::size_t n);

  vertex_id add_vertex();
  void add_edge(vertex_id u, vertex_id v);  // no-op if already present
  void remove_vertex(vertex_id v);

  bool present(vertex_id v) const;
  bool has_edge(vertex_id u, vertex_id v) const;
  // Sorted.
  std::span<const vertex_id> neighbors(vertex_id v) const;
  std::size_t degree(vertex_id v) const { return neighbors(v).size(); }

  // One past the largest identifier ever issued.
  std::size_t capacity() const { return adjacency_.size(); }
  std::vector<vertex_id> vertices() const;
  std::size_t num_vertices() const { return live_; }
  std::size_t num_edges() const;
  std::vector<std::pair<vertex_id, vertex_id>> edge_list() const;  // u < v, sorted

  friend bool operator==(const simple_graph&, const simple_graph&) = default;

 private:
  std::vector<bool> present_;
  std::vector<std::vector<vertex_id>> adjacency_;
  std::size_t live_ = 0;
};

simple_graph complete_graph(std::size_t n);
simple_graph path_graph(std::size_t n);

enum class side { v1, v2, gadget };

// A graph derived from a hypergraph. Graph vertex i < num_v1 stands for the
// hypergraph vertex vertex_of[i]; the next num_edges identifiers stand for
// the hyperedges (edge_of gives the hyperedge index).
struct tagged_graph {
  simple_graph graph;
  std::vector<side> sides;
  std::vector<vertex_id> vertex_of;  // -1 outside V1
  std::vector<std::ptrdiff_t> edge_of;  // -1 outside V2
  std::size_t num_v1 = 0;

  std::optional<vertex_id> graph_vertex(vertex_id hypergraph_vertex) const;
  vertex_id edge_vertex(std::size_t edge_index) const {
    return static_cast<vertex_id>(num_v1 + edge_index);
  }

  friend bool operator==(const tagged_graph&, const tagged_graph&) = default;
};

using bipartite_incidence_graph = tagged_graph;

bipartite_incidence_graph incidence_graph(const hypergraph& h);

// Incidence graph plus a clique on the vertices of every hyperedge.
tagged_graph local_complete_graph(const hypergraph& h);

struct partition3 {
  std::vector<vertex_id> n1, n2, n3;  // each sorted
};

// Splits the open neighbourhood of one or two centres. For two centres the
// neighbourhood excludes the centres themselves and the closed neighbourhood
// is N(v) u N(w) u {v, w}.
partition3 neighborhood_partition(const simple_graph& g, std::span<const vertex_id> centers);

}  // namespace hyperkernel
