#include "hyperkernel/hypergraph.hpp"

#include "hyperkernel/error.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace hyperkernel {

hypergraph::hypergraph(std::vector<vertex_id> vertices, std::vector<edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw error(errc::invalid_argument, "repeated vertex identifier");
  }
  for (auto& e : edges_) {
    if (e.empty() || e.size() > 3) {
      throw error(errc::invalid_argument, "edge of cardinality " + std::to_string(e.size()));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw error(errc::invalid_argument, "edge repeats a vertex");
    }
    for (vertex_id v : e) {
      if (!contains(v)) throw error(errc::invalid_argument, "edge vertex " + std::to_string(v) + " not in vertex set");
    }
  }
}

hypergraph hypergraph::with_vertex_count(std::size_t n, std::vector<edge> edges) {
  std::vector<vertex_id> vs(n);
  for (std::size_t i = 0; i < n; ++i) vs[i] = static_cast<vertex_id>(i);
  return hypergraph(std::move(vs), std::move(edges));
}

bool hypergraph::contains(vertex_id v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t hypergraph::index_of(vertex_id v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<std::size_t> hypergraph::incident_edges(vertex_id v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (std::binary_search(edges_[i].begin(), edges_[i].end(), v)) out.push_back(i);
  }
  return out;
}

std::size_t hypergraph::degree(vertex_id v) const { return incident_edges(v).size(); }

std::size_t hypergraph::max_degree() const {
  std::map<vertex_id, std::size_t> deg;
  std::size_t best = 0;
  for (const auto& e : edges_) {
    for (vertex_id v : e) best = std::max(best, ++deg[v]);
  }
  return best;
}

bool hypergraph::is_uniform() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const edge& e) { return e.size() == 3; });
}

bool hypergraph::is_simple() const {
  std::vector<edge> sorted(edges_);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

hypergraph hypergraph::compacted() const {
  std::vector<edge> relabelled;
  relabelled.reserve(edges_.size());
  for (const auto& e : edges_) {
    edge r;
    for (vertex_id v : e) r.push_back(static_cast<vertex_id>(index_of(v)));
    relabelled.push_back(std::move(r));
  }
  return with_vertex_count(vertices_.size(), std::move(relabelled)).canonical();
}

hypergraph hypergraph::canonical() const {
  hypergraph out = *this;
  std::sort(out.edges_.begin(), out.edges_.end());
  return out;
}

std::string_view to_string(problem_kind p) {
  return p == problem_kind::vertex_cover ? "vertex-cover" : "independent-set";
}

instance::instance(hypergraph h, std::int64_t k_, problem_kind problem_)
    : graph(std::move(h)), k(k_), problem(problem_) {
  if (k < 0) throw error(errc::invalid_argument, "negative parameter k");
  if (k > static_cast<std::int64_t>(graph.num_vertices())) {
    throw error(errc::invalid_argument, "k exceeds the number of vertices");
  }
}

validation_report validate(const hypergraph& h) {
  validation_report r;
  r.uniform = h.is_uniform();
  const auto edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i] == edges[j]) r.duplicate_edges.emplace_back(i, j);
    }
  }
  r.simple = r.duplicate_edges.empty();
  for (vertex_id v : h.vertices()) {
    if (h.degree(v) == 0) r.isolated.push_back(v);
  }
  r.max_degree = h.max_degree();
  return r;
}

stripped strip_isolated(const hypergraph& h) {
  std::vector<bool> used(h.num_vertices(), false);
  for (const auto& e : h.edges()) {
    for (vertex_id v : e) used[h.index_of(v)] = true;
  }
  std::vector<vertex_id> kept, removed;
  for (std::size_t i = 0; i < used.size(); ++i) {
    (used[i] ? kept : removed).push_back(h.vertices()[i]);
  }
  return {hypergraph(std::move(kept), std::vector<edge>(h.edges().begin(), h.edges().end())),
          std::move(removed)};
}

unit_resolution resolve_unit_edges(const instance& inst) {
  if (inst.problem != problem_kind::vertex_cover) {
    throw error(errc::invalid_argument, "unit edges resolve only vertex-cover instances");
  }
  std::vector<vertex_id> vertices(inst.graph.vertices().begin(), inst.graph.vertices().end());
  std::vector<edge> edges(inst.graph.edges().begin(), inst.graph.edges().end());
  std::vector<vertex_id> forced;
  std::int64_t k = inst.k;

  for (;;) {
    auto unit = std::find_if(edges.begin(), edges.end(), [](const edge& e) { return e.size() == 1; });
    if (unit == edges.end()) break;
    const vertex_id v = unit->front();
    if (--k < 0) {
      throw error(errc::parameter_exhausted,
                  std::to_string(forced.size() + 1) + " forced vertices exceed k=" + std::to_string(inst.k));
    }
    forced.push_back(v);
    std::erase_if(edges, [v](const edge& e) { return std::binary_search(e.begin(), e.end(), v); });
    std::erase(vertices, v);
  }
  std::sort(forced.begin(), forced.end());
  return {instance(hypergraph(std::move(vertices), std::move(edges)), k, inst.problem), std::move(forced)};
}

domination find_dominated(const hypergraph& h) {
  domination d;
  const auto vs = h.vertices();
  std::vector<std::vector<std::size_t>> incidence;
  incidence.reserve(vs.size());
  for (vertex_id v : vs) incidence.push_back(h.incident_edges(v));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i == j) continue;
      if (std::includes(incidence[j].begin(), incidence[j].end(), incidence[i].begin(), incidence[i].end())) {
        d.vertices.emplace_back(vs[i], vs[j]);
      }
    }
  }
  const auto es = h.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (i == j || es[j].size() >= es[i].size()) continue;
      if (std::includes(es[i].begin(), es[i].end(), es[j].begin(), es[j].end())) d.edges.emplace_back(i, j);
    }
  }
  return d;
}

}  // namespace hyperkernel
