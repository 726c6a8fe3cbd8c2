#include "hyperkernel/oracles.hpp"

#include "hyperkernel/error.hpp"
#include "hyperkernel/lp.hpp"

#include <algorithm>
#include <bitset>
#include <string>

namespace hyperkernel::oracles {

namespace {

using mask = std::bitset<max_oracle_universe>;

void check_universe(std::size_t size, std::string_view what) {
  if (size > max_oracle_universe) {
    throw error(errc::oracle_ceiling_exceeded,
                std::string(what) + " has " + std::to_string(size) + " elements, limit " +
                    std::to_string(max_oracle_universe));
  }
}

std::vector<std::size_t> members(const mask& m, std::size_t universe) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < universe; ++i) {
    if (m[i]) out.push_back(i);
  }
  return out;
}

// Minimum subset of {0..universe-1} meeting every set. Branches on the
// members of the unhit set with fewest available elements; prunes with a
// greedy packing of pairwise disjoint unhit sets.
class hitting_search {
 public:
  hitting_search(std::size_t universe, std::vector<mask> sets) : universe_(universe), sets_(std::move(sets)) {
    for (const auto& s : sets_) {
      if (s.none()) throw error(errc::infeasible, "a set has no admissible element");
    }
    best_size_ = universe_ + 1;
  }

  mask solve() {
    search(mask{}, mask{}, 0);
    return best_;
  }

 private:
  void search(const mask& chosen, const mask& banned, std::size_t count) {
    if (count >= best_size_) return;
    const mask allowed = ~banned;
    std::size_t pick = sets_.size();
    std::size_t pick_size = universe_ + 1;
    mask packed;
    std::size_t packing = 0;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if ((sets_[i] & chosen).any()) continue;
      const mask avail = sets_[i] & allowed;
      const std::size_t c = avail.count();
      if (c == 0) return;
      if (c < pick_size) {
        pick = i;
        pick_size = c;
      }
      if ((avail & packed).none()) {
        packed |= avail;
        ++packing;
      }
    }
    if (pick == sets_.size()) {
      best_ = chosen;
      best_size_ = count;
      return;
    }
    if (count + packing >= best_size_) return;

    mask extra_ban = banned;
    for (std::size_t e : members(sets_[pick] & allowed, universe_)) {
      mask next = chosen;
      next.set(e);
      search(next, extra_ban, count + 1);
      extra_ban.set(e);
    }
  }

  std::size_t universe_;
  std::vector<mask> sets_;
  mask best_;
  std::size_t best_size_;
};

// Maximum independent set of a graph given by adjacency masks.
class independent_search {
 public:
  independent_search(std::size_t universe, std::vector<mask> adjacency)
      : universe_(universe), adjacency_(std::move(adjacency)) {}

  mask solve() {
    mask all;
    for (std::size_t i = 0; i < universe_; ++i) all.set(i);
    search(all, mask{}, 0);
    return best_;
  }

 private:
  void search(mask candidates, mask chosen, std::size_t count) {
    // Vertices of degree <= 1 among the candidates are always safe to take.
    for (bool again = true; again;) {
      again = false;
      for (std::size_t v = 0; v < universe_; ++v) {
        if (!candidates[v]) continue;
        const mask nb = adjacency_[v] & candidates;
        if (nb.count() <= 1) {
          chosen.set(v);
          ++count;
          candidates &= ~nb;
          candidates.reset(v);
          again = true;
        }
      }
    }
    if (candidates.none()) {
      if (count > best_size_) {
        best_ = chosen;
        best_size_ = count;
      }
      return;
    }
    if (count + candidates.count() <= best_size_) return;

    std::size_t pivot = universe_;
    std::size_t pivot_degree = 0;
    for (std::size_t v = 0; v < universe_; ++v) {
      if (!candidates[v]) continue;
      const std::size_t d = (adjacency_[v] & candidates).count();
      if (pivot == universe_ || d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    mask with = candidates & ~adjacency_[pivot];
    with.reset(pivot);
    mask chosen_with = chosen;
    chosen_with.set(pivot);
    search(with, chosen_with, count + 1);

    mask without = candidates;
    without.reset(pivot);
    search(without, chosen, count);
  }

  std::size_t universe_;
  std::vector<mask> adjacency_;
  mask best_;
  std::size_t best_size_ = 0;
};

std::vector<vertex_id> to_vertices(const mask& m, std::span<const vertex_id> ids) {
  std::vector<vertex_id> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (m[i]) out.push_back(ids[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

vertex_solution min_hitting_set(const hypergraph& h) {
  const auto vs = h.vertices();
  check_universe(vs.size(), "hypergraph");
  std::vector<mask> sets;
  for (const auto& e : h.edges()) {
    mask s;
    for (vertex_id v : e) s.set(h.index_of(v));
    sets.push_back(s);
  }
  const mask best = hitting_search(vs.size(), std::move(sets)).solve();
  vertex_solution out;
  out.witness = to_vertices(best, vs);
  out.size = out.witness.size();
  return out;
}

vertex_solution max_strong_independent_set(const hypergraph& h) {
  const auto vs = h.vertices();
  check_universe(vs.size(), "hypergraph");
  std::vector<mask> adjacency(vs.size());
  for (const auto& e : h.edges()) {
    for (vertex_id a : e) {
      for (vertex_id b : e) {
        if (a != b) adjacency[h.index_of(a)].set(h.index_of(b));
      }
    }
  }
  const mask best = independent_search(vs.size(), std::move(adjacency)).solve();
  vertex_solution out;
  out.witness = to_vertices(best, vs);
  out.size = out.witness.size();
  return out;
}

vertex_solution min_dominating_set(const simple_graph& g, std::span<const vertex_id> excluded) {
  const auto vs = g.vertices();
  check_universe(vs.size(), "graph");
  std::vector<int> index(g.capacity(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);
  mask barred;
  for (vertex_id x : excluded) {
    if (!g.present(x)) throw error(errc::invalid_argument, "excluded vertex not in graph");
    barred.set(index[x]);
  }
  std::vector<mask> sets;
  for (vertex_id v : vs) {
    mask s;
    s.set(index[v]);
    for (vertex_id u : g.neighbors(v)) s.set(index[u]);
    s &= ~barred;
    if (s.none()) throw error(errc::infeasible, "vertex " + std::to_string(v) + " cannot be dominated");
    sets.push_back(s);
  }
  const mask best = hitting_search(vs.size(), std::move(sets)).solve();
  vertex_solution out;
  out.witness = to_vertices(best, vs);
  out.size = out.witness.size();
  return out;
}

vertex_solution min_quasi_dominating_set(const bipartite_incidence_graph& b) {
  const auto& g = b.graph;
  std::vector<vertex_id> v1;
  for (vertex_id v : g.vertices()) {
    if (b.sides[v] == side::v1) v1.push_back(v);
  }
  check_universe(v1.size(), "V1 side");
  std::vector<int> index(g.capacity(), -1);
  for (std::size_t i = 0; i < v1.size(); ++i) index[v1[i]] = static_cast<int>(i);
  std::vector<mask> sets;
  for (vertex_id w : g.vertices()) {
    if (b.sides[w] != side::v2) continue;
    mask s;
    for (vertex_id u : g.neighbors(w)) {
      if (index[u] >= 0) s.set(index[u]);
    }
    if (s.none()) throw error(errc::infeasible, "V2 vertex " + std::to_string(w) + " has no V1 neighbour");
    sets.push_back(s);
  }
  const mask best = hitting_search(v1.size(), std::move(sets)).solve();
  vertex_solution out;
  out.witness = to_vertices(best, v1);
  out.size = out.witness.size();
  return out;
}

matching_solution max_induced_matching(const simple_graph& g) {
  const auto edges = g.edge_list();
  check_universe(edges.size(), "edge set");
  // Two edges conflict when they touch or are joined by an edge.
  std::vector<mask> conflict(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      const bool clash = a == c || a == d || b == c || b == d || g.has_edge(a, c) || g.has_edge(a, d) ||
                         g.has_edge(b, c) || g.has_edge(b, d);
      if (clash) {
        conflict[i].set(j);
        conflict[j].set(i);
      }
    }
  }
  const mask best = independent_search(edges.size(), std::move(conflict)).solve();
  matching_solution out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (best[i]) out.witness.push_back(edges[i]);
  }
  out.size = out.witness.size();
  return out;
}

bool is_hitting_set(const hypergraph& h, std::span<const vertex_id> s) {
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const edge& e) {
    return std::any_of(e.begin(), e.end(), [&](vertex_id v) { return std::find(s.begin(), s.end(), v) != s.end(); });
  });
}

bool is_strong_independent_set(const hypergraph& h, std::span<const vertex_id> s) {
  for (vertex_id v : s) {
    if (!h.contains(v)) return false;
  }
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const edge& e) {
    return std::count_if(e.begin(), e.end(), [&](vertex_id v) { return std::find(s.begin(), s.end(), v) != s.end(); }) <= 1;
  });
}

bool is_dominating_set(const simple_graph& g, std::span<const vertex_id> d) {
  std::vector<char> dominated(g.capacity(), 0);
  for (vertex_id v : d) {
    if (!g.present(v)) return false;
    dominated[v] = 1;
    for (vertex_id u : g.neighbors(v)) dominated[u] = 1;
  }
  for (vertex_id v : g.vertices()) {
    if (!dominated[v]) return false;
  }
  return true;
}

bool is_induced_matching(const simple_graph& g, std::span<const std::pair<vertex_id, vertex_id>> m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!g.has_edge(m[i].first, m[i].second)) return false;
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      for (vertex_id a : {m[i].first, m[i].second}) {
        for (vertex_id b : {m[j].first, m[j].second}) {
          if (a == b || g.has_edge(a, b)) return false;
        }
      }
    }
  }
  return true;
}

fractional_solution fractional_cover(const hypergraph& h) {
  const auto vs = h.vertices();
  const auto es = h.edges();
  // The packing LP over edges is the dual of the covering LP; the upper
  // bounds x <= 1 never bind at a covering optimum.
  lp::matrix a(vs.size(), std::vector<rational>(es.size(), rational(0)));
  for (std::size_t j = 0; j < es.size(); ++j) {
    for (vertex_id v : es[j]) a[h.index_of(v)][j] = 1;
  }
  const std::vector<rational> b(vs.size(), rational(1));
  const std::vector<rational> c(es.size(), rational(1));
  const auto sol = lp::maximize_packing(a, b, c);
  if (!sol) throw error(errc::invalid_argument, "packing LP unbounded");  // impossible for nonempty edges

  fractional_solution out;
  out.value = sol->value;
  out.weights = sol->dual;
  out.packing = sol->primal;
  return out;
}

std::optional<multiplicities> quasi_regular_multiplicities(const hypergraph& h) {
  const auto vs = h.vertices();
  const auto es = h.edges();
  if (vs.empty()) return std::nullopt;
  lp::matrix a(vs.size(), std::vector<rational>(es.size(), rational(0)));
  for (std::size_t j = 0; j < es.size(); ++j) {
    for (vertex_id v : es[j]) a[h.index_of(v)][j] = 1;
  }
  const auto y = lp::find_nonnegative_solution(a, std::vector<rational>(vs.size(), rational(1)));
  if (!y) return std::nullopt;

  big_int lcd = 1;
  for (const auto& value : *y) {
    const big_int d = value.denominator();
    lcd = lcd / boost::multiprecision::gcd(lcd, d) * d;
  }
  multiplicities mu;
  mu.degree = lcd;
  for (const auto& value : *y) {
    const rational scaled = value * rational(lcd, big_int(1));
    mu.per_edge.push_back(scaled.numerator());
  }
  return mu;
}

bool is_valid_multiplicities(const hypergraph& h, const multiplicities& mu) {
  if (mu.degree <= 0 || mu.per_edge.size() != h.num_edges()) return false;
  for (const auto& k : mu.per_edge) {
    if (k < 0) return false;
  }
  for (vertex_id v : h.vertices()) {
    big_int total = 0;
    for (std::size_t j : h.incident_edges(v)) total += mu.per_edge[j];
    if (total != mu.degree) return false;
  }
  return true;
}

}  // namespace hyperkernel::oracles
