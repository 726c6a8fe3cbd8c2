#pragma once

#include "hyperkernel/graph.hpp"

#include <utility>
#include <vector>

namespace hyperkernel {

enum class kuratowski_kind { none, k5, k33 };

struct planarity_result {
  bool planar = false;
  // Planar case: cyclic order of neighbours around each vertex, indexed by
  // graph identifier (empty for absent vertices).
  std::vector<std::vector<vertex_id>> rotation;
  // Non-planar case: edges of a subdivided K5 or K3,3.
  std::vector<std::pair<vertex_id, vertex_id>> witness;
  kuratowski_kind witness_kind = kuratowski_kind::none;
};

planarity_result planarity(const simple_graph& g);

// True iff rotation is a rotation system of g that traces a planar map
// (V - E + F = 2 per connected component).
bool verify_embedding(const simple_graph& g, const std::vector<std::vector<vertex_id>>& rotation);

// Classifies edges as a subdivision of K5 or K3,3 contained in g; none when
// the edge set is neither.
kuratowski_kind classify_kuratowski(const simple_graph& g,
                                    const std::vector<std::pair<vertex_id, vertex_id>>& edges);

}  // namespace hyperkernel
