#pragma once

#include "hyperkernel/hypergraph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace hyperkernel::gen {

enum class family { regular, bounded_degree, planar };

std::string_view to_string(family f);
std::optional<family> parse_family(std::string_view name);

// Every vertex has degree exactly r; needs 3 | r*n. Configuration-model
// sampling with rejection of degenerate or repeated triples.
hypergraph regular(std::size_t n, std::size_t r, std::uint64_t seed);

// m distinct triples with max degree <= d.
hypergraph bounded_degree(std::size_t n, std::size_t d, std::size_t m, std::uint64_t seed);

// Faces of a random planar triangulation on n >= 3 vertices. When
// face_count is given, a vertex-covering subset of that many faces is kept
// (clamped to what is achievable). The result always passes the planarity
// test on its incidence graph; vertices are 0..n-1.
hypergraph planar(std::size_t n, std::uint64_t seed, std::optional<std::size_t> face_count = std::nullopt);

// Uniformly random distinct triples on n vertices, isolated vertices then
// stripped and the rest relabelled to 0..n'-1.
hypergraph random_uniform(std::size_t n, std::size_t m, std::uint64_t seed);

// Relabels the non-isolated vertices to 0..n'-1.
hypergraph without_isolated(const hypergraph& h);

}  // namespace hyperkernel::gen
