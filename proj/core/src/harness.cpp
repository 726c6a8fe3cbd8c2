#include "hyperkernel/harness.hpp"

#include "hyperkernel/error.hpp"
#include "hyperkernel/oracles.hpp"
#include "hyperkernel/planar_kernel.hpp"
#include "hyperkernel/rng.hpp"

#include <algorithm>
#include <chrono>
#include <string>

namespace hyperkernel::harness {

std::string_view to_string(method m) {
  switch (m) {
    case method::quasi_regular: return "qr";
    case method::bounded_degree_vc: return "bd";
    case method::bounded_degree_is: return "bd-is";
    case method::planar: return "planar";
  }
  return "unknown";
}

std::string_view class_tag(method m) {
  switch (m) {
    case method::quasi_regular: return "quasi-regularizable";
    case method::bounded_degree_vc:
    case method::bounded_degree_is: return "bounded-degree";
    case method::planar: return "planar";
  }
  return "unknown";
}

namespace {

bool solves(const instance& inst) {
  if (inst.problem == problem_kind::vertex_cover) {
    return static_cast<std::int64_t>(oracles::min_hitting_set(inst.graph).size) <= inst.k;
  }
  return static_cast<std::int64_t>(oracles::max_strong_independent_set(inst.graph).size) >= inst.k;
}

}  // namespace

kernel_outcome run_method(const instance& inst, method m, std::optional<std::int64_t> degree) {
  const auto d = degree.value_or(static_cast<std::int64_t>(inst.graph.max_degree()));
  switch (m) {
    case method::quasi_regular: return kernelize_quasi_regular(inst);
    case method::bounded_degree_vc: return kernelize_vc_bounded_degree(inst, d);
    case method::bounded_degree_is: return kernelize_is_bounded_degree(inst, d);
    case method::planar: return kernelize_planar_vc(inst);
  }
  throw error(errc::invalid_argument, "unknown method");
}

namespace {

std::pair<kernel_report, kernel_outcome> run_and_report(const instance& inst, method m, std::string instance_id,
                                                         std::optional<std::int64_t> degree) {
  kernel_report r;
  r.instance_id = std::move(instance_id);
  r.class_tag = std::string(class_tag(m));
  r.used = m;
  r.n_before = inst.graph.num_vertices();
  r.m_before = inst.graph.num_edges();
  r.k_before = inst.k;

  const auto start = std::chrono::steady_clock::now();
  const kernel_outcome outcome = run_method(inst, m, degree);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (const auto* d = std::get_if<decided>(&outcome)) {
    r.decision = std::string(to_string(d->value));
    r.kernel_answer = d->value == answer::yes;
  } else {
    const auto& k = std::get<kernel>(outcome);
    r.decision = "kernel";
    r.n_after = k.reduced.graph.num_vertices();
    r.m_after = k.reduced.graph.num_edges();
    r.k_after = k.reduced.k;
    r.forced = k.forced;
    r.bound_claimed = k.stats.bound_claimed;
    r.bound_unit = std::string(to_string(k.stats.unit));
    r.bound_asserted = k.stats.bound_asserted;
    const auto measured = static_cast<std::int64_t>(k.stats.unit == size_unit::vertices ? k.stats.n : k.stats.m);
    r.bound_satisfied = measured <= k.stats.bound_claimed;
  }
  return {std::move(r), outcome};
}

}  // namespace

kernel_report run_kernel(const instance& inst, method m, std::string instance_id, std::optional<std::int64_t> degree) {
  return run_and_report(inst, m, std::move(instance_id), degree).first;
}

kernel_report verify_preservation(const instance& inst, method m, std::string instance_id,
                                  const verify_options& options) {
  if (inst.graph.num_vertices() > options.oracle_ceiling) {
    throw error(errc::oracle_ceiling_exceeded, std::to_string(inst.graph.num_vertices()) + " vertices > ceiling " +
                                                   std::to_string(options.oracle_ceiling));
  }
  auto [r, outcome] = run_and_report(inst, m, std::move(instance_id), options.degree);
  r.oracle_answer = solves(inst);
  if (const auto* k = std::get_if<kernel>(&outcome)) r.kernel_answer = solves(k->reduced);
  r.oracle = *r.oracle_answer == *r.kernel_answer ? oracle_status::pass : oracle_status::fail;
  return r;
}

nlohmann::ordered_json to_json(const kernel_report& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["instance"] = r.instance_id;
  j["class"] = r.class_tag;
  j["method"] = std::string(to_string(r.used));
  j["n_before"] = r.n_before;
  j["m_before"] = r.m_before;
  j["k_before"] = r.k_before;
  j["n_after"] = r.n_after;
  j["m_after"] = r.m_after;
  j["k_after"] = r.k_after;
  auto forced = nlohmann::ordered_json::array();
  for (vertex_id v : r.forced) forced.push_back(v + 1);
  j["forced"] = forced;
  j["decision"] = r.decision;
  j["bound_claimed"] = r.bound_claimed;
  j["bound_unit"] = r.bound_unit;
  j["bound_asserted"] = r.bound_asserted;
  j["bound_satisfied"] = r.bound_satisfied;
  nlohmann::ordered_json oracle;
  switch (r.oracle) {
    case oracle_status::skipped: oracle["status"] = "skipped"; break;
    case oracle_status::pass: oracle["status"] = "pass"; break;
    case oracle_status::fail: oracle["status"] = "FAIL"; break;
  }
  if (r.oracle != oracle_status::skipped) {
    oracle["original"] = *r.oracle_answer ? "yes" : "no";
    oracle["kernel"] = *r.kernel_answer ? "yes" : "no";
  }
  j["oracle"] = oracle;
  if (include_timing) j["seconds"] = r.seconds;
  return j;
}

namespace {

hypergraph sample(gen::family f, std::uint64_t seed, std::optional<std::int64_t>& degree) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    seeded_rng rng(mix_seed(seed, attempt));
    try {
      switch (f) {
        case gen::family::regular: {
          const auto r = static_cast<std::size_t>(rng.between(1, 3));
          std::vector<std::size_t> sizes;
          for (std::size_t n = 3; n <= 12; ++n) {
            if ((n * r) % 3 == 0 && (n - 1) * (n - 2) / 2 >= r) sizes.push_back(n);
          }
          const std::size_t n = sizes[rng.below(sizes.size())];
          return gen::regular(n, r, rng.next());
        }
        case gen::family::bounded_degree: {
          const auto d = rng.between(1, 4);
          const auto n = static_cast<std::size_t>(rng.between(3, 12));
          const auto cap = std::min<std::size_t>(n * static_cast<std::size_t>(d) / 3, n * (n - 1) * (n - 2) / 6);
          const auto m = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(std::max<std::size_t>(cap, 1))));
          degree = d;
          return gen::bounded_degree(n, static_cast<std::size_t>(d), m, rng.next());
        }
        case gen::family::planar: {
          const auto n = static_cast<std::size_t>(rng.between(4, 12));
          const auto faces = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(2 * n - 4)));
          return gen::planar(n, rng.next(), faces);
        }
      }
    } catch (const error& e) {
      if (e.code() != errc::generation_failed || attempt > 100) throw;
    }
  }
}

}  // namespace

sweep_result verify_sweep(gen::family f, std::size_t count, std::uint64_t seed) {
  sweep_result out;
  for (std::size_t i = 0; i < count; ++i) {
    std::optional<std::int64_t> degree;
    const hypergraph h = sample(f, mix_seed(seed, i), degree);
    const std::string id = std::string(gen::to_string(f)) + "-" + std::to_string(i);
    const auto n = static_cast<std::int64_t>(h.num_vertices());
    verify_options options;
    options.degree = degree;

    auto check = [&](std::int64_t k, problem_kind p, method m) {
      if (k < 0 || k > n) return;
      out.reports.push_back(verify_preservation(instance(h, k, p), m, id, options));
      if (out.reports.back().oracle == oracle_status::fail) ++out.failures;
    };

    if (f == gen::family::bounded_degree) {
      const auto tau = static_cast<std::int64_t>(oracles::min_hitting_set(h).size);
      check(tau - 1, problem_kind::vertex_cover, method::bounded_degree_vc);
      check(tau, problem_kind::vertex_cover, method::bounded_degree_vc);
      const auto alpha = static_cast<std::int64_t>(oracles::max_strong_independent_set(h).size);
      check(1, problem_kind::independent_set, method::bounded_degree_is);
      check(alpha, problem_kind::independent_set, method::bounded_degree_is);
      check(alpha + 1, problem_kind::independent_set, method::bounded_degree_is);
    } else {
      const auto m = f == gen::family::regular ? method::quasi_regular : method::planar;
      const auto tau = static_cast<std::int64_t>(oracles::min_hitting_set(h).size);
      check(tau - 1, problem_kind::vertex_cover, m);
      check(tau, problem_kind::vertex_cover, m);
    }
  }
  return out;
}

nlohmann::ordered_json to_json(const sweep_result& s, gen::family f, std::size_t count, std::uint64_t seed,
                               bool include_timing) {
  nlohmann::ordered_json j;
  j["family"] = std::string(gen::to_string(f));
  j["count"] = count;
  j["seed"] = seed;
  j["checks"] = s.reports.size();
  j["failures"] = s.failures;
  auto list = nlohmann::ordered_json::array();
  for (const auto& r : s.reports) list.push_back(to_json(r, include_timing));
  j["reports"] = list;
  return j;
}

}  // namespace hyperkernel::harness
