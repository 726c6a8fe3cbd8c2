#pragma once

#include "hyperkernel/generators.hpp"
#include "hyperkernel/hypergraph.hpp"
#include "hyperkernel/kernels.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperkernel::harness {

enum class method { quasi_regular, bounded_degree_vc, bounded_degree_is, planar };

std::string_view to_string(method m);
std::string_view class_tag(method m);

enum class oracle_status { skipped, pass, fail };

struct kernel_report {
  std::string instance_id;
  std::string class_tag;
  method used = method::planar;
  std::size_t n_before = 0, m_before = 0;
  std::size_t n_after = 0, m_after = 0;
  std::int64_t k_before = 0, k_after = 0;
  std::vector<vertex_id> forced;
  std::string decision;  // "yes", "no" or "kernel"
  std::int64_t bound_claimed = 0;
  std::string bound_unit;
  bool bound_asserted = true;
  bool bound_satisfied = true;
  oracle_status oracle = oracle_status::skipped;
  std::optional<bool> oracle_answer;  // on the original instance
  std::optional<bool> kernel_answer;  // implied by the outcome
  double seconds = 0.0;
};

struct verify_options {
  std::size_t oracle_ceiling = 12;  // max vertices for oracle checks
  std::optional<std::int64_t> degree;  // d for the bounded-degree methods
};

// Runs the kernelization and compares its implied decision with the exact
// oracle on the original instance. Throws error(oracle_ceiling_exceeded).
kernel_report verify_preservation(const instance& inst, method m, std::string instance_id,
                                  const verify_options& options = {});

// Runs one kernelization; d defaults to the actual max degree.
kernel_outcome run_method(const instance& inst, method m, std::optional<std::int64_t> degree = std::nullopt);

// Same as verify_preservation without the oracle comparison.
kernel_report run_kernel(const instance& inst, method m, std::string instance_id,
                         std::optional<std::int64_t> degree = std::nullopt);

// Field order is fixed; timing appears only when include_timing is set.
nlohmann::ordered_json to_json(const kernel_report& r, bool include_timing = true);

struct sweep_result {
  std::vector<kernel_report> reports;
  std::size_t failures = 0;
};

// Generates count instances of the family from the seed and verifies every
// applicable method at k in {opt-1, opt} (and k = opt+1 for independent set).
sweep_result verify_sweep(gen::family f, std::size_t count, std::uint64_t seed);

nlohmann::ordered_json to_json(const sweep_result& s, gen::family f, std::size_t count,
                               std::uint64_t seed, bool include_timing = true);

}  // namespace hyperkernel::harness
