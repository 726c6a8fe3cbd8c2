#include "hyperkernel/planar_kernel.hpp"

#include "hyperkernel/error.hpp"
#include "hyperkernel/planarity.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace hyperkernel {

namespace {

std::vector<vertex_id> sorted_union(std::vector<vertex_id> a, const std::vector<vertex_id>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<vertex_id> neighbors_within(const simple_graph& g, vertex_id v, const std::vector<vertex_id>& set) {
  std::vector<vertex_id> out;
  for (vertex_id x : set) {
    if (g.has_edge(v, x)) out.push_back(x);
  }
  return out;
}

bool all_adjacent(const simple_graph& g, vertex_id v, const std::vector<vertex_id>& set) {
  return std::all_of(set.begin(), set.end(), [&](vertex_id x) { return g.has_edge(v, x); });
}

// A step that only swaps gadgets for gadgets with the same attachments yields
// an isomorphic graph; applying it would never reach a fixpoint.
bool is_noop(const colored_graph& cg, const std::vector<vertex_id>& removed, const std::vector<gadget_record>& added) {
  std::multiset<std::vector<vertex_id>> before, after;
  for (vertex_id r : removed) {
    if (cg.sides[r] != side::gadget) return false;
    const auto nb = cg.graph.neighbors(r);
    before.emplace(nb.begin(), nb.end());
  }
  for (const auto& g : added) after.insert(g.attached);
  return before == after;
}

std::optional<trace_step> make_step(const colored_graph& cg, int rule, std::vector<vertex_id> centers,
                                    std::vector<vertex_id> removed, const std::vector<std::vector<vertex_id>>& attach) {
  std::vector<gadget_record> gadgets;
  auto next = static_cast<vertex_id>(cg.graph.capacity());
  for (const auto& a : attach) gadgets.push_back({next++, a});
  if (is_noop(cg, removed, gadgets)) return std::nullopt;
  trace_step step;
  step.rule = rule;
  step.centers = std::move(centers);
  step.removed = std::move(removed);
  step.gadgets = std::move(gadgets);
  return step;
}

std::string join(const std::vector<vertex_id>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<vertex_id> split_ids(std::string_view text, std::size_t line) {
  std::vector<vertex_id> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    vertex_id value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw error(errc::syntax_error, "trace line " + std::to_string(line) + ": bad id '" + std::string(token) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string serialize_trace(const reduction_trace& trace) {
  std::ostringstream os;
  for (const auto& s : trace.steps) {
    os << "rule=" << s.rule << " centers=" << join(s.centers) << " removed=" << join(s.removed)
       << " recolored=" << join(s.recolored) << " gadgets=";
    for (std::size_t i = 0; i < s.gadgets.size(); ++i) {
      if (i) os << ';';
      os << s.gadgets[i].id << ':' << join(s.gadgets[i].attached);
    }
    os << '\n';
  }
  return os.str();
}

reduction_trace parse_trace(std::string_view text) {
  reduction_trace trace;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    trace_step step;
    std::istringstream fields(line);
    std::string field;
    int seen = 0;
    while (fields >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) throw error(errc::syntax_error, "trace line " + std::to_string(number));
      const std::string key = field.substr(0, eq);
      const std::string_view value = std::string_view(field).substr(eq + 1);
      if (key == "rule") {
        auto ids = split_ids(value, number);
        if (ids.size() != 1) throw error(errc::syntax_error, "trace line " + std::to_string(number) + ": rule id");
        step.rule = ids.front();
      } else if (key == "centers") {
        step.centers = split_ids(value, number);
      } else if (key == "removed") {
        step.removed = split_ids(value, number);
      } else if (key == "recolored") {
        step.recolored = split_ids(value, number);
      } else if (key == "gadgets") {
        std::string_view rest = value;
        while (!rest.empty()) {
          const auto semi = rest.find(';');
          const auto item = rest.substr(0, semi);
          const auto colon = item.find(':');
          if (colon == std::string_view::npos) {
            throw error(errc::syntax_error, "trace line " + std::to_string(number) + ": gadget");
          }
          const auto id = split_ids(item.substr(0, colon), number);
          if (id.size() != 1) throw error(errc::syntax_error, "trace line " + std::to_string(number) + ": gadget id");
          step.gadgets.push_back({id.front(), split_ids(item.substr(colon + 1), number)});
          if (semi == std::string_view::npos) break;
          rest.remove_prefix(semi + 1);
        }
      } else {
        throw error(errc::syntax_error, "trace line " + std::to_string(number) + ": unknown key '" + key + "'");
      }
      ++seen;
    }
    if (seen != 5) throw error(errc::syntax_error, "trace line " + std::to_string(number) + ": expected 5 fields");
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

void apply_step(colored_graph& cg, const trace_step& step, std::size_t step_index) {
  for (vertex_id x : step.recolored) {
    if (!cg.graph.present(x)) throw error(errc::invalid_argument, "recolouring absent vertex");
    cg.colors[x] = color::white;
  }
  for (vertex_id x : step.removed) cg.graph.remove_vertex(x);
  for (const auto& g : step.gadgets) {
    const vertex_id id = cg.graph.add_vertex();
    if (id != g.id) throw error(errc::invalid_argument, "gadget id mismatch on replay");
    cg.colors.push_back(color::white);
    cg.sides.push_back(side::gadget);
    cg.vertex_of.push_back(-1);
    cg.edge_of.push_back(-1);
    cg.origin.push_back(static_cast<std::ptrdiff_t>(step_index));
    for (vertex_id a : g.attached) cg.graph.add_edge(id, a);
  }
}

colored_graph replay(colored_graph initial, const reduction_trace& trace) {
  for (std::size_t i = 0; i < trace.steps.size(); ++i) apply_step(initial, trace.steps[i], i);
  return initial;
}

colored_graph init_colored(const hypergraph& h) {
  const auto report = validate(h);
  if (!report.uniform || !report.simple || !report.isolated.empty()) {
    throw error(errc::invalid_argument, "colored graph needs a simple 3-uniform hypergraph without isolated vertices");
  }
  tagged_graph lg = local_complete_graph(h);
  colored_graph cg;
  cg.colors.assign(lg.graph.capacity(), color::black);
  cg.origin.assign(lg.graph.capacity(), -1);
  cg.graph = std::move(lg.graph);
  cg.sides = std::move(lg.sides);
  cg.vertex_of = std::move(lg.vertex_of);
  cg.edge_of = std::move(lg.edge_of);
  return cg;
}

rule_result apply_rule1(colored_graph cg) {
  rule_result out;
  for (vertex_id v : cg.graph.vertices()) {
    if (!cg.is_black(v)) continue;
    const vertex_id centre[] = {v};
    const auto p = neighborhood_partition(cg.graph, centre);
    std::vector<vertex_id> targets;
    for (vertex_id x : sorted_union(p.n2, p.n3)) {
      if (cg.is_black(x)) targets.push_back(x);
    }
    if (targets.empty()) continue;
    trace_step step;
    step.rule = 1;
    step.centers = {v};
    step.recolored = std::move(targets);
    for (vertex_id x : step.recolored) cg.colors[x] = color::white;
    out.steps.push_back(std::move(step));
  }
  out.changed = !out.steps.empty();
  out.graph = std::move(cg);
  return out;
}

std::optional<trace_step> plan_single_rule(const colored_graph& cg, vertex_id v) {
  if (!cg.is_black(v)) return std::nullopt;
  const vertex_id centre[] = {v};
  const auto p = neighborhood_partition(cg.graph, centre);
  if (p.n3.empty()) return std::nullopt;
  return make_step(cg, 2, {v}, sorted_union(p.n2, p.n3), {{v}});
}

rule_result apply_rule2(colored_graph cg) {
  rule_result out;
  for (vertex_id v : cg.graph.vertices()) {
    if (auto step = plan_single_rule(cg, v)) {
      apply_step(cg, *step, 0);
      out.steps.push_back(std::move(*step));
      out.changed = true;
      break;
    }
  }
  out.graph = std::move(cg);
  return out;
}

bool pair_rule_guard(const simple_graph& g, vertex_id v, vertex_id w) {
  const vertex_id centres[] = {v, w};
  const auto p = neighborhood_partition(g, centres);
  if (p.n3.empty()) return false;
  for (vertex_id c : sorted_union(p.n2, p.n3)) {
    const bool dominates =
        std::all_of(p.n3.begin(), p.n3.end(), [&](vertex_id x) { return x == c || g.has_edge(c, x); });
    if (dominates) return false;
  }
  return true;
}

std::optional<trace_step> plan_pair_rule(const colored_graph& cg, vertex_id v, vertex_id w) {
  if (v == w || !cg.is_black(v) || !cg.is_black(w)) return std::nullopt;
  const auto& g = cg.graph;
  if (!pair_rule_guard(g, v, w)) return std::nullopt;
  const vertex_id centres[] = {v, w};
  const auto p = neighborhood_partition(g, centres);
  const bool in_v = all_adjacent(g, v, p.n3);
  const bool in_w = all_adjacent(g, w, p.n3);

  if (in_v && in_w) {
    const auto common = neighbors_within(g, w, neighbors_within(g, v, p.n2));
    return make_step(cg, 3, {v, w}, sorted_union(p.n3, common), {{v, w}, {v, w}});
  }
  if (in_v) return make_step(cg, 3, {v, w}, sorted_union(p.n3, neighbors_within(g, v, p.n2)), {{v}});
  if (in_w) return make_step(cg, 3, {v, w}, sorted_union(p.n3, neighbors_within(g, w, p.n2)), {{w}});
  return make_step(cg, 3, {v, w}, sorted_union(p.n3, p.n2), {{v}, {w}});
}

rule_result apply_rule3(colored_graph cg) {
  rule_result out;
  const auto vertices = cg.graph.vertices();
  for (std::size_t i = 0; i < vertices.size() && !out.changed; ++i) {
    if (!cg.is_black(vertices[i])) continue;
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (auto step = plan_pair_rule(cg, vertices[i], vertices[j])) {
        apply_step(cg, *step, 0);
        out.steps.push_back(std::move(*step));
        out.changed = true;
        break;
      }
    }
  }
  out.graph = std::move(cg);
  return out;
}

fixpoint_result reduce_fixpoint(colored_graph cg, std::span<const reduction_rule> extra) {
  fixpoint_result out;
  const std::size_t v = std::max<std::size_t>(cg.graph.num_vertices(), 1);
  const std::size_t ceiling = 10 * v * v;

  // Gadget origins refer to positions in the trace, so steps are re-applied
  // through apply_step with their final index.
  auto record = [&](rule_result r) {
    for (auto& step : r.steps) {
      const std::size_t index = out.trace.steps.size();
      for (const auto& g : step.gadgets) r.graph.origin[g.id] = static_cast<std::ptrdiff_t>(index);
      out.trace.steps.push_back(std::move(step));
    }
    out.applications += r.steps.size();
    cg = std::move(r.graph);
    return r.changed;
  };

  for (;;) {
    bool changed = record(apply_rule1(std::move(cg)));
    changed |= record(apply_rule2(std::move(cg)));
    changed |= record(apply_rule3(std::move(cg)));
    for (const auto& rule : extra) {
      if (auto step = rule(cg)) {
        apply_step(cg, *step, out.trace.steps.size());
        out.trace.steps.push_back(std::move(*step));
        ++out.applications;
        changed = true;
      }
    }
    if (out.applications > ceiling) {
      throw error(errc::iteration_ceiling, std::to_string(out.applications) + " rule applications exceed " +
                                               std::to_string(ceiling));
    }
    if (!changed) break;
  }
  out.graph = std::move(cg);
  return out;
}

reconstruction reconstruct_hypergraph(const colored_graph& cg) {
  const auto& g = cg.graph;
  std::vector<vertex_id> vertices;
  for (vertex_id x : g.vertices()) {
    if (cg.sides[x] == side::v1 && cg.colors[x] == color::black) vertices.push_back(cg.vertex_of[x]);
  }
  std::vector<edge> edges;
  std::set<edge> seen;
  reconstruction out;
  for (vertex_id x : g.vertices()) {
    if (cg.sides[x] == side::v1) continue;
    edge e;
    for (vertex_id u : g.neighbors(x)) {
      if (cg.sides[u] == side::v1 && cg.colors[u] == color::black) e.push_back(cg.vertex_of[u]);
    }
    std::sort(e.begin(), e.end());
    if (e.empty() || !seen.insert(e).second) continue;
    if (cg.sides[x] == side::gadget) out.gadget_edges.push_back(e);
    edges.push_back(std::move(e));
  }
  out.graph = hypergraph(std::move(vertices), std::move(edges));
  return out;
}

planar_run kernelize_planar_vc_traced(const instance& inst) {
  if (inst.problem != problem_kind::vertex_cover) {
    throw error(errc::invalid_argument, "planar kernel handles vertex-cover instances");
  }
  const hypergraph& h = inst.graph;
  if (!planarity(incidence_graph(h).graph).planar) {
    throw error(errc::not_planar, "incidence graph is not planar");
  }

  planar_run run{decided{answer::no, ""}, init_colored(h), {}, {}};
  run.fixpoint = reduce_fixpoint(run.initial);
  run.rebuilt = reconstruct_hypergraph(run.fixpoint.graph);

  const auto n_rebuilt = static_cast<std::int64_t>(run.rebuilt.graph.num_vertices());
  const instance rebuilt(run.rebuilt.graph, std::min(inst.k, n_rebuilt), problem_kind::vertex_cover);
  unit_resolution resolved{rebuilt, {}};
  try {
    resolved = resolve_unit_edges(rebuilt);
  } catch (const error& e) {
    if (e.code() != errc::parameter_exhausted) throw;
    run.outcome = decided{answer::no, std::string("forced vertices exhaust k (") + e.what() + ")"};
    return run;
  }

  auto trimmed = strip_isolated(resolved.result.graph).graph;
  const auto n_final = static_cast<std::int64_t>(trimmed.num_vertices());
  kernel k{instance(std::move(trimmed), std::min(resolved.result.k, n_final), problem_kind::vertex_cover),
           std::move(resolved.forced), {}};
  k.stats.n = k.reduced.graph.num_vertices();
  k.stats.m = k.reduced.graph.num_edges();
  k.stats.bound_claimed = planar_kernel_factor * k.reduced.k;
  k.stats.unit = size_unit::vertices;
  k.stats.bound_asserted = false;
  k.stats.note = "empirical: three of eight rules implemented";
  run.outcome = std::move(k);
  return run;
}

kernel_outcome kernelize_planar_vc(const instance& inst) { return kernelize_planar_vc_traced(inst).outcome; }

induced_matching_transform::induced_matching_transform(const hypergraph& h)
    : source_(h), graph_(local_complete_graph(h)) {
  if (!h.is_uniform() || !h.is_simple()) {
    throw error(errc::invalid_argument, "induced matching transform needs a simple 3-uniform hypergraph");
  }
}

std::vector<std::pair<vertex_id, vertex_id>> induced_matching_transform::forward(
    std::span<const vertex_id> independent) const {
  std::vector<std::pair<vertex_id, vertex_id>> matching;
  std::set<vertex_id> used;
  for (vertex_id u : independent) {
    const auto gv = graph_.graph_vertex(u);
    if (!gv) throw error(errc::invalid_argument, "vertex " + std::to_string(u) + " not in hypergraph");
    std::optional<vertex_id> partner;
    for (vertex_id nb : graph_.graph.neighbors(*gv)) {
      if (graph_.sides[nb] == side::v2 && !used.count(nb)) {
        partner = nb;
        break;
      }
    }
    if (!partner) throw error(errc::unmatchable_vertex, "vertex " + std::to_string(u) + " has no free hyperedge");
    used.insert(*partner);
    matching.emplace_back(*gv, *partner);
  }
  std::sort(matching.begin(), matching.end());
  if (matching.size() != independent.size()) throw error(errc::invalid_argument, "forward map lost elements");
  return matching;
}

std::vector<vertex_id> induced_matching_transform::backward(
    std::span<const std::pair<vertex_id, vertex_id>> matching) const {
  std::set<vertex_id> out;
  for (auto [a, b] : matching) {
    const bool a1 = graph_.sides.at(a) == side::v1;
    const bool b1 = graph_.sides.at(b) == side::v1;
    if (!a1 && !b1) throw error(errc::invalid_argument, "matching edge without a V1 endpoint");
    // An edge inside a hyperedge contributes either endpoint; the smaller one.
    const vertex_id pick = a1 && b1 ? std::min(a, b) : (a1 ? a : b);
    out.insert(graph_.vertex_of[pick]);
  }
  if (out.size() != matching.size()) throw error(errc::invalid_argument, "backward map lost elements");
  return {out.begin(), out.end()};
}

}  // namespace hyperkernel
