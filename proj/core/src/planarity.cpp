#include "hyperkernel/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hyperkernel {

namespace {

using boost_graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                          boost::property<boost::vertex_index_t, int>,
                                          boost::property<boost::edge_index_t, int>>;
using boost_edge = boost::graph_traits<boost_graph>::edge_descriptor;

struct compact_view {
  boost_graph graph;
  std::vector<vertex_id> to_original;
};

compact_view to_boost(const simple_graph& g) {
  compact_view view;
  view.to_original = g.vertices();
  std::vector<int> to_compact(g.capacity(), -1);
  for (std::size_t i = 0; i < view.to_original.size(); ++i) to_compact[view.to_original[i]] = static_cast<int>(i);
  view.graph = boost_graph(view.to_original.size());
  int index = 0;
  for (auto [u, v] : g.edge_list()) {
    auto [e, inserted] = boost::add_edge(to_compact[u], to_compact[v], view.graph);
    boost::put(boost::edge_index, view.graph, e, index++);
  }
  return view;
}

}  // namespace

planarity_result planarity(const simple_graph& g) {
  compact_view view = to_boost(g);
  const std::size_t n = boost::num_vertices(view.graph);
  std::vector<std::vector<boost_edge>> embedding(n);
  std::vector<boost_edge> kuratowski;

  planarity_result result;
  result.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = view.graph,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, view.graph)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  if (result.planar) {
    result.rotation.assign(g.capacity(), {});
    for (std::size_t i = 0; i < n; ++i) {
      auto& order = result.rotation[view.to_original[i]];
      for (const auto& e : embedding[i]) {
        const auto s = boost::source(e, view.graph);
        const auto t = boost::target(e, view.graph);
        order.push_back(view.to_original[s == i ? t : s]);
      }
    }
  } else {
    for (const auto& e : kuratowski) {
      vertex_id u = view.to_original[boost::source(e, view.graph)];
      vertex_id v = view.to_original[boost::target(e, view.graph)];
      result.witness.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(result.witness.begin(), result.witness.end());
    result.witness.erase(std::unique(result.witness.begin(), result.witness.end()), result.witness.end());
    result.witness_kind = classify_kuratowski(g, result.witness);
  }
  return result;
}

bool verify_embedding(const simple_graph& g, const std::vector<std::vector<vertex_id>>& rotation) {
  const auto vertices = g.vertices();
  if (rotation.size() < g.capacity()) return false;
  for (vertex_id v : vertices) {
    std::vector<vertex_id> sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    const auto nb = g.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) return false;
  }

  // Position of u in the rotation at v, for successor lookups.
  std::map<std::pair<vertex_id, vertex_id>, std::size_t> position;
  for (vertex_id v : vertices) {
    for (std::size_t i = 0; i < rotation[v].size(); ++i) position[{v, rotation[v][i]}] = i;
  }

  std::set<std::pair<vertex_id, vertex_id>> seen;
  std::size_t faces = 0;
  for (vertex_id v : vertices) {
    for (vertex_id u : rotation[v]) {
      if (seen.count({v, u})) continue;
      ++faces;
      // Walk the face starting with dart v -> u.
      vertex_id a = v, b = u;
      while (seen.insert({a, b}).second) {
        const auto& around = rotation[b];
        const std::size_t next = (position[{b, a}] + 1) % around.size();
        a = std::exchange(b, around[next]);
      }
    }
  }

  // Components and isolated vertices.
  std::vector<vertex_id> parent(g.capacity());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](vertex_id x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t isolated = 0;
  for (vertex_id v : vertices) {
    if (g.degree(v) == 0) ++isolated;
    for (vertex_id u : g.neighbors(v)) parent[find(u)] = find(v);
  }
  std::size_t components = 0;
  for (vertex_id v : vertices) components += find(v) == v;

  const auto lhs = static_cast<long>(vertices.size()) - static_cast<long>(g.num_edges()) +
                   static_cast<long>(faces + isolated);
  return lhs == 2 * static_cast<long>(components);
}

kuratowski_kind classify_kuratowski(const simple_graph& g,
                                    const std::vector<std::pair<vertex_id, vertex_id>>& edges) {
  std::map<vertex_id, std::vector<vertex_id>> adj;
  std::set<std::pair<vertex_id, vertex_id>> unique;
  for (auto [u, v] : edges) {
    if (u == v || !g.has_edge(u, v)) return kuratowski_kind::none;
    if (!unique.insert({std::min(u, v), std::max(u, v)}).second) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<vertex_id> branch;
  for (const auto& [v, nb] : adj) {
    if (nb.size() < 2) return kuratowski_kind::none;
    if (nb.size() > 2) branch.push_back(v);
  }
  const bool maybe_k5 = branch.size() == 5;
  const bool maybe_k33 = branch.size() == 6;
  if (!maybe_k5 && !maybe_k33) return kuratowski_kind::none;
  const std::size_t want_degree = maybe_k5 ? 4 : 3;
  for (vertex_id b : branch) {
    if (adj[b].size() != want_degree) return kuratowski_kind::none;
  }

  // Follow every path out of every branch vertex to the next branch vertex.
  std::set<vertex_id> branch_set(branch.begin(), branch.end());
  std::set<std::pair<vertex_id, vertex_id>> contracted;
  std::set<vertex_id> interior_seen;
  std::size_t path_count = 0;
  for (vertex_id b : branch) {
    for (vertex_id first : adj[b]) {
      vertex_id prev = b, cur = first;
      std::vector<vertex_id> interior;
      while (!branch_set.count(cur)) {
        interior.push_back(cur);
        const auto& nb = adj[cur];
        vertex_id next = nb[0] == prev ? nb[1] : nb[0];
        prev = std::exchange(cur, next);
      }
      if (cur == b) return kuratowski_kind::none;  // cycle through a single branch vertex
      if (b < cur) {
        ++path_count;
        if (!contracted.insert({b, cur}).second) return kuratowski_kind::none;  // parallel paths
        for (vertex_id x : interior) {
          if (!interior_seen.insert(x).second) return kuratowski_kind::none;
        }
      }
    }
  }
  // Every degree-2 vertex must lie on one of the paths.
  if (interior_seen.size() + branch.size() != adj.size()) return kuratowski_kind::none;

  if (maybe_k5) return path_count == 10 ? kuratowski_kind::k5 : kuratowski_kind::none;

  // K3,3: two-colour the contracted graph and require all 9 cross pairs.
  if (path_count != 9) return kuratowski_kind::none;
  std::map<vertex_id, int> colour;
  colour[branch[0]] = 0;
  for (int round = 0; round < 6; ++round) {
    for (auto [u, v] : contracted) {
      if (colour.count(u) && !colour.count(v)) colour[v] = 1 - colour[u];
      if (colour.count(v) && !colour.count(u)) colour[u] = 1 - colour[v];
    }
  }
  if (colour.size() != 6) return kuratowski_kind::none;
  int left = 0;
  for (auto& [v, c] : colour) left += c == 0;
  if (left != 3) return kuratowski_kind::none;
  for (auto [u, v] : contracted) {
    if (colour[u] == colour[v]) return kuratowski_kind::none;
  }
  return kuratowski_kind::k33;
}

}  // namespace hyperkernel
