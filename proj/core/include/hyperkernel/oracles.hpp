#pragma once

#include "hyperkernel/graph.hpp"
#include "hyperkernel/hypergraph.hpp"
#include "hyperkernel/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

// Exact ground-truth solvers. All are exponential in the worst case and meant
// for desk-scale instances; inputs beyond max_oracle_universe elements raise
// error(oracle_ceiling_exceeded).
namespace hyperkernel::oracles {

inline constexpr std::size_t max_oracle_universe = 256;

struct vertex_solution {
  std::size_t size = 0;
  std::vector<vertex_id> witness;  // sorted
};

struct matching_solution {
  std::size_t size = 0;
  std::vector<std::pair<vertex_id, vertex_id>> witness;  // u < v, sorted
};

// tau(H): minimum vertex set meeting every edge.
vertex_solution min_hitting_set(const hypergraph& h);

// Maximum vertex set no two of which share an edge.
vertex_solution max_strong_independent_set(const hypergraph& h);

// Minimum dominating set avoiding `excluded`; throws error(infeasible) if
// some vertex cannot be dominated.
vertex_solution min_dominating_set(const simple_graph& g, std::span<const vertex_id> excluded = {});

// Minimum D within V1 whose neighbourhood covers V2. Witness holds graph ids.
vertex_solution min_quasi_dominating_set(const bipartite_incidence_graph& b);

matching_solution max_induced_matching(const simple_graph& g);

// Witness predicates.
bool is_hitting_set(const hypergraph& h, std::span<const vertex_id> s);
bool is_strong_independent_set(const hypergraph& h, std::span<const vertex_id> s);
bool is_dominating_set(const simple_graph& g, std::span<const vertex_id> d);
bool is_induced_matching(const simple_graph& g, std::span<const std::pair<vertex_id, vertex_id>> m);

struct fractional_solution {
  rational value;                 // tau*(H)
  std::vector<rational> weights;  // per vertex, in vertices() order
  std::vector<rational> packing;  // per edge; certifies optimality by duality
};

// Exact optimum of the LP relaxation of the hitting-set program.
fractional_solution fractional_cover(const hypergraph& h);

struct multiplicities {
  std::vector<big_int> per_edge;  // k_i
  big_int degree;                 // common degree r > 0
};

// Edge multiplicities making H regular, if H is quasi-regularizable.
std::optional<multiplicities> quasi_regular_multiplicities(const hypergraph& h);

bool is_valid_multiplicities(const hypergraph& h, const multiplicities& mu);

}  // namespace hyperkernel::oracles
