#pragma once

#include "hyperkernel/hypergraph.hpp"
#include "hyperkernel/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hyperkernel {

enum class answer { yes, no };
enum class size_unit { vertices, edges };

std::string_view to_string(answer a);
std::string_view to_string(size_unit u);

struct decided {
  answer value;
  std::string reason;
};

struct kernel_stats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::int64_t bound_claimed = 0;
  size_unit unit = size_unit::vertices;
  bool bound_asserted = true;  // false when the bound is only a logged claim
  std::string note;
};

struct kernel {
  instance reduced;
  std::vector<vertex_id> forced;
  kernel_stats stats;
};

using kernel_outcome = std::variant<decided, kernel>;

// Vertex cover on a quasi-regularizable hypergraph: no-instance when n > 3k,
// otherwise the input is a kernel with at most 3k vertices. Throws
// error(not_quasi_regularizable) if the hypergraph is not.
kernel_outcome kernelize_quasi_regular(const instance& inst);

// Vertex cover with max degree <= d: no-instance when m > d*k.
kernel_outcome kernelize_vc_bounded_degree(const instance& inst, std::int64_t d);

// Strong independent set with max degree <= d: yes-instance when
// m > (2d+1)*d*k.
kernel_outcome kernelize_is_bounded_degree(const instance& inst, std::int64_t d);

// k_d = s(I) - k with s(I) the vertex count.
std::int64_t dual_parameter(const instance& inst);

struct duality_bound {
  rational alpha_d;
  rational lower_bound;             // alpha_d / (alpha_d - 1)
  std::optional<rational> alpha;    // supplied primal constant, if any
  std::optional<bool> consistent;   // (alpha - 1)(alpha_d - 1) >= 1
};

// Smallest primal kernel constant compatible with a dual alpha_d kernel
// unless P = NP. Throws error(degenerate_constant) for alpha_d <= 1.
duality_bound duality_lower_bound(const rational& alpha_d,
                                  std::optional<rational> alpha = std::nullopt);

}  // namespace hyperkernel
