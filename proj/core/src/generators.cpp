#include "hyperkernel/generators.hpp"

#include "hyperkernel/error.hpp"
#include "hyperkernel/graph.hpp"
#include "hyperkernel/planarity.hpp"
#include "hyperkernel/rng.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

namespace hyperkernel::gen {

namespace {

constexpr int max_rounds = 10000;

edge sorted_triple(vertex_id a, vertex_id b, vertex_id c) {
  edge e{a, b, c};
  std::sort(e.begin(), e.end());
  return e;
}

std::size_t choose3(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

}  // namespace

std::string_view to_string(family f) {
  switch (f) {
    case family::regular: return "regular";
    case family::bounded_degree: return "bd";
    case family::planar: return "planar";
  }
  return "unknown";
}

std::optional<family> parse_family(std::string_view name) {
  if (name == "regular") return family::regular;
  if (name == "bd" || name == "bounded-degree") return family::bounded_degree;
  if (name == "planar") return family::planar;
  return std::nullopt;
}

hypergraph regular(std::size_t n, std::size_t r, std::uint64_t seed) {
  if (n < 3 || r == 0 || (n * r) % 3 != 0) {
    throw error(errc::invalid_argument, "regular family needs n >= 3, r >= 1 and 3 | r*n");
  }
  seeded_rng rng(seed);
  std::vector<vertex_id> stubs;
  for (std::size_t v = 0; v < n; ++v) stubs.insert(stubs.end(), r, static_cast<vertex_id>(v));

  for (int round = 0; round < max_rounds; ++round) {
    rng.shuffle(stubs);
    std::set<edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i < stubs.size() && ok; i += 3) {
      if (stubs[i] == stubs[i + 1] || stubs[i] == stubs[i + 2] || stubs[i + 1] == stubs[i + 2]) {
        ok = false;
      } else {
        ok = edges.insert(sorted_triple(stubs[i], stubs[i + 1], stubs[i + 2])).second;
      }
    }
    if (ok) return hypergraph::with_vertex_count(n, {edges.begin(), edges.end()});
  }
  throw error(errc::generation_failed, "no simple " + std::to_string(r) + "-regular hypergraph on " +
                                           std::to_string(n) + " vertices after " + std::to_string(max_rounds) +
                                           " rounds");
}

hypergraph bounded_degree(std::size_t n, std::size_t d, std::size_t m, std::uint64_t seed) {
  if (n < 3 && m > 0) throw error(errc::invalid_argument, "bounded-degree family needs n >= 3");
  if (3 * m > n * d || m > choose3(n)) {
    throw error(errc::generation_failed, "m=" + std::to_string(m) + " edges cannot fit degree bound d=" +
                                             std::to_string(d) + " on n=" + std::to_string(n));
  }
  seeded_rng rng(seed);
  for (int round = 0; round < max_rounds / 10; ++round) {
    std::vector<std::size_t> residual(n, d);
    std::set<edge> edges;
    int stalls = 0;
    while (edges.size() < m && stalls < 64) {
      std::vector<vertex_id> open;
      for (std::size_t v = 0; v < n; ++v) {
        if (residual[v] > 0) open.push_back(static_cast<vertex_id>(v));
      }
      if (open.size() < 3) break;
      rng.shuffle(open);
      const auto e = sorted_triple(open[0], open[1], open[2]);
      if (!edges.insert(e).second) {
        ++stalls;
        continue;
      }
      for (vertex_id v : e) --residual[v];
    }
    if (edges.size() == m) return hypergraph::with_vertex_count(n, {edges.begin(), edges.end()});
  }
  throw error(errc::generation_failed, "could not place " + std::to_string(m) + " edges with degree <= " +
                                           std::to_string(d));
}

hypergraph planar(std::size_t n, std::uint64_t seed, std::optional<std::size_t> face_count) {
  if (n < 3) throw error(errc::invalid_argument, "planar family needs n >= 3");
  seeded_rng rng(seed);

  // Oriented faces of a triangulated sphere.
  using face = std::array<vertex_id, 3>;
  std::vector<face> faces;
  if (n == 3) {
    faces = {{0, 1, 2}};
  } else {
    faces = {{0, 1, 2}, {0, 2, 1}};
    for (vertex_id v = 3; v < static_cast<vertex_id>(n); ++v) {
      const std::size_t pick = rng.below(faces.size());
      const auto [a, b, c] = faces[pick];
      faces[pick] = {a, b, v};
      faces.push_back({b, c, v});
      faces.push_back({c, a, v});
    }
    // Random edge flips to move away from stacked triangulations.
    auto has_edge = [&](vertex_id x, vertex_id y) {
      return std::any_of(faces.begin(), faces.end(), [&](const face& f) {
        return std::find(f.begin(), f.end(), x) != f.end() && std::find(f.begin(), f.end(), y) != f.end();
      });
    };
    for (std::size_t attempt = 0; attempt < 3 * n; ++attempt) {
      const std::size_t fi = rng.below(faces.size());
      const std::size_t rot = rng.below(3);
      const vertex_id a = faces[fi][rot], b = faces[fi][(rot + 1) % 3], c = faces[fi][(rot + 2) % 3];
      std::size_t fj = faces.size();
      vertex_id d = -1;
      for (std::size_t j = 0; j < faces.size(); ++j) {
        for (std::size_t s = 0; s < 3; ++s) {
          if (faces[j][s] == b && faces[j][(s + 1) % 3] == a) {
            fj = j;
            d = faces[j][(s + 2) % 3];
          }
        }
      }
      if (fj == faces.size() || d == c || has_edge(c, d)) continue;
      faces[fi] = {a, d, c};
      faces[fj] = {d, b, c};
    }
  }

  std::vector<edge> all;
  for (const auto& f : faces) all.push_back(sorted_triple(f[0], f[1], f[2]));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<edge> chosen = all;
  if (face_count && *face_count < all.size()) {
    rng.shuffle(all);
    std::vector<bool> covered(n, false), taken(all.size(), false);
    chosen.clear();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (std::any_of(all[i].begin(), all[i].end(), [&](vertex_id v) { return !covered[v]; })) {
        taken[i] = true;
        chosen.push_back(all[i]);
        for (vertex_id v : all[i]) covered[v] = true;
      }
    }
    for (std::size_t i = 0; i < all.size() && chosen.size() < *face_count; ++i) {
      if (!taken[i]) chosen.push_back(all[i]);
    }
  }
  hypergraph h = hypergraph::with_vertex_count(n, std::move(chosen)).canonical();

  if (!planarity(incidence_graph(h).graph).planar) {
    throw error(errc::generation_failed, "generated face hypergraph failed the planarity certificate");
  }
  return h;
}

hypergraph random_uniform(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 3) throw error(errc::invalid_argument, "random family needs n >= 3");
  m = std::min(m, choose3(n));
  seeded_rng rng(seed);
  std::set<edge> edges;
  while (edges.size() < m) {
    const auto a = static_cast<vertex_id>(rng.below(n));
    const auto b = static_cast<vertex_id>(rng.below(n));
    const auto c = static_cast<vertex_id>(rng.below(n));
    if (a == b || a == c || b == c) continue;
    edges.insert(sorted_triple(a, b, c));
  }
  return without_isolated(hypergraph::with_vertex_count(n, {edges.begin(), edges.end()}));
}

hypergraph without_isolated(const hypergraph& h) { return strip_isolated(h).graph.compacted(); }

}  // namespace hyperkernel::gen
