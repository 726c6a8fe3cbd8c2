#include "hyperkernel/graph.hpp"

#include "hyperkernel/error.hpp"

#include <algorithm>
#include <string>

namespace hyperkernel {

simple_graph::simple_graph(std::size_t n) : present_(n, true), adjacency_(n), live_(n) {}

vertex_id simple_graph::add_vertex() {
  present_.push_back(true);
  adjacency_.emplace_back();
  ++live_;
  return static_cast<vertex_id>(adjacency_.size() - 1);
}

void simple_graph::add_edge(vertex_id u, vertex_id v) {
  if (u == v) throw error(errc::invalid_argument, "self-loop in simple graph");
  if (!present(u) || !present(v)) throw error(errc::invalid_argument, "edge endpoint absent");
  auto insert = [](std::vector<vertex_id>& list, vertex_id x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) list.insert(it, x);
  };
  insert(adjacency_[u], v);
  insert(adjacency_[v], u);
}

void simple_graph::remove_vertex(vertex_id v) {
  if (!present(v)) return;
  for (vertex_id u : adjacency_[v]) std::erase(adjacency_[u], v);
  adjacency_[v].clear();
  present_[v] = false;
  --live_;
}

bool simple_graph::present(vertex_id v) const {
  return v >= 0 && static_cast<std::size_t>(v) < present_.size() && present_[v];
}

bool simple_graph::has_edge(vertex_id u, vertex_id v) const {
  if (!present(u) || !present(v)) return false;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::span<const vertex_id> simple_graph::neighbors(vertex_id v) const { return adjacency_.at(v); }

std::vector<vertex_id> simple_graph::vertices() const {
  std::vector<vertex_id> out;
  out.reserve(live_);
  for (std::size_t i = 0; i < present_.size(); ++i) {
    if (present_[i]) out.push_back(static_cast<vertex_id>(i));
  }
  return out;
}

std::size_t simple_graph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& a : adjacency_) twice += a.size();
  return twice / 2;
}

std::vector<std::pair<vertex_id, vertex_id>> simple_graph::edge_list() const {
  std::vector<std::pair<vertex_id, vertex_id>> out;
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (vertex_id v : adjacency_[u]) {
      if (static_cast<vertex_id>(u) < v) out.emplace_back(static_cast<vertex_id>(u), v);
    }
  }
  return out;
}

simple_graph complete_graph(std::size_t n) {
  simple_graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(static_cast<vertex_id>(u), static_cast<vertex_id>(v));
  }
  return g;
}

simple_graph path_graph(std::size_t n) {
  simple_graph g(n);
  for (std::size_t u = 0; u + 1 < n; ++u) g.add_edge(static_cast<vertex_id>(u), static_cast<vertex_id>(u + 1));
  return g;
}

std::optional<vertex_id> tagged_graph::graph_vertex(vertex_id hypergraph_vertex) const {
  auto it = std::lower_bound(vertex_of.begin(), vertex_of.begin() + static_cast<std::ptrdiff_t>(num_v1),
                             hypergraph_vertex);
  if (it == vertex_of.begin() + static_cast<std::ptrdiff_t>(num_v1) || *it != hypergraph_vertex) return std::nullopt;
  return static_cast<vertex_id>(it - vertex_of.begin());
}

bipartite_incidence_graph incidence_graph(const hypergraph& h) {
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  tagged_graph out;
  out.graph = simple_graph(n + m);
  out.num_v1 = n;
  out.sides.assign(n + m, side::v2);
  out.vertex_of.assign(n + m, -1);
  out.edge_of.assign(n + m, -1);
  for (std::size_t i = 0; i < n; ++i) {
    out.sides[i] = side::v1;
    out.vertex_of[i] = h.vertices()[i];
  }
  for (std::size_t j = 0; j < m; ++j) {
    const auto vb = out.edge_vertex(j);
    out.edge_of[vb] = static_cast<std::ptrdiff_t>(j);
    for (vertex_id v : h.edges()[j]) out.graph.add_edge(static_cast<vertex_id>(h.index_of(v)), vb);
  }
  return out;
}

tagged_graph local_complete_graph(const hypergraph& h) {
  tagged_graph out = incidence_graph(h);
  for (const auto& e : h.edges()) {
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        out.graph.add_edge(static_cast<vertex_id>(h.index_of(e[a])), static_cast<vertex_id>(h.index_of(e[b])));
      }
    }
  }
  return out;
}

partition3 neighborhood_partition(const simple_graph& g, std::span<const vertex_id> centers) {
  if (centers.empty() || centers.size() > 2) {
    throw error(errc::invalid_argument, "partition needs one or two centres");
  }
  for (vertex_id c : centers) {
    if (!g.present(c)) throw error(errc::invalid_argument, "centre " + std::to_string(c) + " absent");
  }
  if (centers.size() == 2 && centers[0] == centers[1]) {
    throw error(errc::invalid_argument, "centres must be distinct");
  }

  std::vector<char> in_open(g.capacity(), 0), in_closed(g.capacity(), 0);
  for (vertex_id c : centers) {
    in_closed[c] = 1;
    for (vertex_id u : g.neighbors(c)) in_open[u] = in_closed[u] = 1;
  }
  for (vertex_id c : centers) in_open[c] = 0;

  partition3 p;
  std::vector<char> in_n1(g.capacity(), 0);
  std::vector<vertex_id> open;
  for (std::size_t u = 0; u < in_open.size(); ++u) {
    if (in_open[u]) open.push_back(static_cast<vertex_id>(u));
  }
  for (vertex_id u : open) {
    const auto nu = g.neighbors(u);
    if (std::any_of(nu.begin(), nu.end(), [&](vertex_id x) { return !in_closed[x]; })) {
      p.n1.push_back(u);
      in_n1[u] = 1;
    }
  }
  for (vertex_id u : open) {
    if (in_n1[u]) continue;
    const auto nu = g.neighbors(u);
    if (std::any_of(nu.begin(), nu.end(), [&](vertex_id x) { return in_n1[x] != 0; })) {
      p.n2.push_back(u);
    } else {
      p.n3.push_back(u);
    }
  }
  return p;
}

}  // namespace hyperkernel
