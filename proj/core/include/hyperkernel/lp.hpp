#pragma once

#include "hyperkernel/rational.hpp"

#include <optional>
#include <vector>

namespace hyperkernel::lp {

using matrix = std::vector<std::vector<rational>>;

struct packing_solution {
  rational value;
  std::vector<rational> primal;  // y, one entry per column
  std::vector<rational> dual;    // x, one entry per row; optimal for the covering dual
};

// max c.y  s.t.  A y <= b, y >= 0, with b >= 0. Exact simplex with Bland's
// rule starting from the slack basis. Returns nullopt if unbounded.
std::optional<packing_solution> maximize_packing(const matrix& a, const std::vector<rational>& b,
                                                 const std::vector<rational>& c);

// A basic solution of A y = b, y >= 0 (b >= 0), or nullopt if none exists.
std::optional<std::vector<rational>> find_nonnegative_solution(const matrix& a,
                                                               const std::vector<rational>& b);

}  // namespace hyperkernel::lp
