#include "hyperkernel/kernels.hpp"

#include "hyperkernel/error.hpp"
#include "hyperkernel/oracles.hpp"

#include <string>

namespace hyperkernel {

std::string_view to_string(answer a) { return a == answer::yes ? "yes" : "no"; }

std::string_view to_string(size_unit u) { return u == size_unit::vertices ? "vertices" : "edges"; }

namespace {

void require_problem(const instance& inst, problem_kind want) {
  if (inst.problem != want) {
    throw error(errc::invalid_argument,
                "expected a " + std::string(to_string(want)) + " instance, got " + std::string(to_string(inst.problem)));
  }
}

void require_degree(const instance& inst, std::int64_t d) {
  if (d < 0) throw error(errc::invalid_argument, "negative degree bound");
  const auto actual = static_cast<std::int64_t>(inst.graph.max_degree());
  if (actual > d) {
    throw error(errc::degree_exceeded, "max degree " + std::to_string(actual) + " > d=" + std::to_string(d));
  }
}

kernel unchanged(const instance& inst, std::int64_t bound, size_unit unit, std::string note) {
  kernel_stats stats;
  stats.n = inst.graph.num_vertices();
  stats.m = inst.graph.num_edges();
  stats.bound_claimed = bound;
  stats.unit = unit;
  stats.note = std::move(note);
  return kernel{inst, {}, std::move(stats)};
}

}  // namespace

kernel_outcome kernelize_quasi_regular(const instance& inst) {
  require_problem(inst, problem_kind::vertex_cover);
  if (!oracles::quasi_regular_multiplicities(inst.graph)) {
    throw error(errc::not_quasi_regularizable, "no regularizing edge multiplicities exist");
  }
  // tau* = n/3 on quasi-regularizable 3-uniform hypergraphs and tau* <= tau.
  const auto n = static_cast<std::int64_t>(inst.graph.num_vertices());
  if (n > 3 * inst.k) {
    return decided{answer::no, "tau* = n/3 = " + rational(n, 3).str() + " > k = " + std::to_string(inst.k)};
  }
  return unchanged(inst, 3 * inst.k, size_unit::vertices, "n <= 3k");
}

kernel_outcome kernelize_vc_bounded_degree(const instance& inst, std::int64_t d) {
  require_problem(inst, problem_kind::vertex_cover);
  require_degree(inst, d);
  const auto m = static_cast<std::int64_t>(inst.graph.num_edges());
  if (m > d * inst.k) {
    return decided{answer::no, "m = " + std::to_string(m) + " > d*k = " + std::to_string(d * inst.k)};
  }
  return unchanged(inst, d * inst.k, size_unit::edges, "m <= dk");
}

kernel_outcome kernelize_is_bounded_degree(const instance& inst, std::int64_t d) {
  require_problem(inst, problem_kind::independent_set);
  require_degree(inst, d);
  const auto m = static_cast<std::int64_t>(inst.graph.num_edges());
  const std::int64_t cap = (2 * d + 1) * d * inst.k;
  if (m > cap) {
    return decided{answer::yes, "m = " + std::to_string(m) + " > (2d+1)dk = " + std::to_string(cap)};
  }
  return unchanged(inst, cap, size_unit::edges, "m <= (2d+1)dk");
}

std::int64_t dual_parameter(const instance& inst) {
  return static_cast<std::int64_t>(inst.graph.num_vertices()) - inst.k;
}

duality_bound duality_lower_bound(const rational& alpha_d, std::optional<rational> alpha) {
  if (alpha_d <= rational(1)) {
    throw error(errc::degenerate_constant, "alpha_d = " + alpha_d.str() + " must exceed 1");
  }
  duality_bound out;
  out.alpha_d = alpha_d;
  out.lower_bound = alpha_d / (alpha_d - rational(1));
  if (alpha) {
    out.alpha = *alpha;
    out.consistent = (*alpha - rational(1)) * (alpha_d - rational(1)) >= rational(1);
  }
  return out;
}

}  // namespace hyperkernel
