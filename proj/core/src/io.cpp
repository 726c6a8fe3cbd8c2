#include "hyperkernel/io.hpp"

#include "hyperkernel/error.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace hyperkernel::io {

namespace {

[[noreturn]] void syntax(std::size_t line, const std::string& what) {
  throw error(errc::syntax_error, "line " + std::to_string(line) + ": " + what);
}

std::vector<long long> read_numbers(const std::string& text, std::size_t line) {
  std::istringstream in(text);
  std::vector<long long> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      syntax(line, "expected an integer, got '" + token + "'");
    }
    if (used != token.size()) syntax(line, "expected an integer, got '" + token + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace

hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<edge> edges;
  std::set<edge> seen;

  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!have_header) {
      std::istringstream head(line.substr(first));
      std::string tag;
      head >> tag;
      if (tag != "h") syntax(number, "expected header 'h <n> <m>'");
      std::string rest;
      std::getline(head, rest);
      const auto values = read_numbers(rest, number);
      if (values.size() != 2 || values[0] < 0 || values[1] < 0) syntax(number, "expected header 'h <n> <m>'");
      n = values[0];
      m = values[1];
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) syntax(number, "more edge lines than declared");
    const auto values = read_numbers(line, number);
    if (values.empty() || values.size() > 3) syntax(number, "an edge has 1 to 3 vertices");
    edge e;
    for (long long v : values) {
      if (v < 1 || v > n) {
        throw error(errc::vertex_out_of_range,
                    "line " + std::to_string(number) + ": vertex " + std::to_string(v) + " outside 1.." +
                        std::to_string(n));
      }
      e.push_back(static_cast<vertex_id>(v - 1));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) syntax(number, "edge repeats a vertex");
    if (!seen.insert(e).second) {
      throw error(errc::duplicate_edge, "line " + std::to_string(number) + ": edge repeated");
    }
    edges.push_back(std::move(e));
  }
  if (!have_header) syntax(number, "missing header");
  if (static_cast<long long>(edges.size()) != m) {
    syntax(number, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return hypergraph::with_vertex_count(static_cast<std::size_t>(n), std::move(edges));
}

hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::invalid_argument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

std::string emit_hypergraph(const hypergraph& h) {
  const hypergraph c = h.compacted();
  std::ostringstream os;
  os << "h " << c.num_vertices() << ' ' << c.num_edges() << '\n';
  for (const auto& e : c.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i] + 1;
    os << '\n';
  }
  return os.str();
}

}  // namespace hyperkernel::io
