#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperkernel {

enum class errc {
  invalid_argument,
  parameter_exhausted,
  infeasible,
  not_quasi_regularizable,
  degree_exceeded,
  degenerate_constant,
  iteration_ceiling,
  not_planar,
  unmatchable_vertex,
  syntax_error,
  duplicate_edge,
  vertex_out_of_range,
  generation_failed,
  oracle_ceiling_exceeded,
};

std::string_view to_string(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace hyperkernel
