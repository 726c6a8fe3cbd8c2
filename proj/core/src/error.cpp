#include "hyperkernel/error.hpp"

namespace hyperkernel {

std::string_view to_string(errc code) {
  switch (code) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::parameter_exhausted: return "ParameterExhausted";
    case errc::infeasible: return "Infeasible";
    case errc::not_quasi_regularizable: return "NotQuasiRegularizable";
    case errc::degree_exceeded: return "DegreeExceeded";
    case errc::degenerate_constant: return "DegenerateConstant";
    case errc::iteration_ceiling: return "IterationCeiling";
    case errc::not_planar: return "NotPlanar";
    case errc::unmatchable_vertex: return "UnmatchableVertex";
    case errc::syntax_error: return "SyntaxError";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::generation_failed: return "GenerationFailed";
    case errc::oracle_ceiling_exceeded: return "OracleCeilingExceeded";
  }
  return "Unknown";
}

}  // namespace hyperkernel
