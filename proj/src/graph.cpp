#include "symtree/graph.hpp"

#include <algorithm>
#include <sstream>

#include "json_util.hpp"
#include "symtree/error.hpp"

namespace symtree {

Graph::Graph(std::vector<std::string> vertices,
             std::span<const std::pair<std::string, std::string>> edges) {
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].empty()) throw InputError("vertex names must be nonempty");
    if (i > 0 && vertices[i] == vertices[i - 1]) {
      throw InputError("duplicate vertex: " + vertices[i]);
    }
  }
  names_ = std::move(vertices);
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = find(a);
    auto ib = find(b);
    if (!ia || !ib) throw InputError("edge endpoint not in graph: " + (ia ? b : a));
    if (*ia == *ib) throw InputError("self-loop at vertex " + a);
    edges_.push_back(make_edge(*ia, *ib));
  }
  build_adjacency();
}

Graph Graph::from_indexed(std::vector<std::string> sorted_vertices, std::vector<Edge> edges) {
  Graph g;
  for (std::size_t i = 1; i < sorted_vertices.size(); ++i) {
    if (!(sorted_vertices[i - 1] < sorted_vertices[i])) {
      throw InputError("vertex names must be sorted and unique");
    }
  }
  g.names_ = std::move(sorted_vertices);
  for (auto& e : edges) {
    if (e.u == e.v) throw InputError("self-loop at vertex " + g.names_.at(e.u));
    if (e.u >= g.names_.size() || e.v >= g.names_.size()) throw InputError("edge index out of range");
    e = make_edge(e.u, e.v);
  }
  g.edges_ = std::move(edges);
  g.build_adjacency();
  return g;
}

void Graph::build_adjacency() {
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw InputError("duplicate edge: " + names_[dup->u] + " " + names_[dup->v]);
  }
  const std::size_t n = names_.size();
  adj_.assign(n * n, 0);
  nbrs_.assign(n, {});
  for (const Edge& e : edges_) {
    adj_[e.u * n + e.v] = adj_[e.v * n + e.u] = 1;
    nbrs_[e.u].push_back(e.v);
    nbrs_[e.v].push_back(e.u);
  }
  for (auto& list : nbrs_) std::sort(list.begin(), list.end());
}

std::optional<std::size_t> Graph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Graph::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InputError("vertex not in graph: " + std::string(name));
}

bool Graph::has_edge(std::string_view a, std::string_view b) const {
  auto ia = find(a);
  auto ib = find(b);
  return ia && ib && adjacent(*ia, *ib);
}

std::optional<std::size_t> Graph::edge_index(Edge e) const {
  e = make_edge(e.u, e.v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = a + 1; b < g.order(); ++b) {
      if (!g.adjacent(a, b)) edges.push_back({a, b});
    }
  }
  return Graph::from_indexed(g.vertices(), std::move(edges));
}

Graph induced_subgraph_indices(const Graph& g, std::span<const std::size_t> vertices) {
  std::vector<std::size_t> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (std::size_t v : keep) {
    if (v >= g.order()) throw InputError("vertex not in graph");
    names.push_back(g.name(v));
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      if (g.adjacent(keep[a], keep[b])) edges.push_back({a, b});
    }
  }
  return Graph::from_indexed(std::move(names), std::move(edges));
}

Graph induced_subgraph(const Graph& g, std::span<const std::string> vertices) {
  std::vector<std::size_t> idx;
  idx.reserve(vertices.size());
  for (const auto& name : vertices) idx.push_back(g.index_of(name));
  return induced_subgraph_indices(g, idx);
}

std::vector<std::vector<std::size_t>> component_indices(const Graph& g) {
  std::vector<std::vector<std::size_t>> parts;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> part{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < part.size(); ++head) {
      for (std::size_t w : g.neighbors(part[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          part.push_back(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

std::vector<std::vector<std::string>> connected_components(const Graph& g) {
  std::vector<std::vector<std::string>> out;
  for (const auto& part : component_indices(g)) {
    auto& names = out.emplace_back();
    for (std::size_t v : part) names.push_back(g.name(v));
  }
  return out;
}

namespace {

bool is_p4_tuple(const Graph& g, std::size_t x, std::size_t y, std::size_t u, std::size_t v) {
  return g.adjacent(x, y) && g.adjacent(y, u) && g.adjacent(u, v) && !g.adjacent(x, u) &&
         !g.adjacent(x, v) && !g.adjacent(y, v);
}

}  // namespace

std::vector<P4Indices> induced_p4_indices(const Graph& g) {
  std::vector<P4Indices> out;
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          const std::array<std::size_t, 4> q{a, b, c, d};
          int deg[4] = {0, 0, 0, 0};
          int edges = 0;
          for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
              if (g.adjacent(q[i], q[j])) {
                ++deg[i];
                ++deg[j];
                ++edges;
              }
            }
          }
          if (edges != 3) continue;
          // Three edges on four vertices with two leaves and no isolated vertex is a path.
          int leaves = 0;
          bool isolated = false;
          for (int d4 : deg) {
            leaves += d4 == 1;
            isolated = isolated || d4 == 0;
          }
          if (leaves != 2 || isolated) continue;
          std::size_t x = 0;
          for (int i = 0; i < 4; ++i) {
            if (deg[i] == 1) {
              x = q[i];
              break;
            }
          }
          P4Indices path{x, 0, 0, 0};
          std::size_t prev = n;
          for (int step = 1; step < 4; ++step) {
            for (std::size_t w : q) {
              if (w != prev && w != path[step - 1] && g.adjacent(path[step - 1], w)) {
                path[step] = w;
                break;
              }
            }
            prev = path[step - 1];
          }
          out.push_back(path);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<P4Indices> least_induced_p4(const Graph& g) {
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y : g.neighbors(x)) {
      for (std::size_t u : g.neighbors(y)) {
        if (u == x || g.adjacent(x, u)) continue;
        for (std::size_t v : g.neighbors(u)) {
          if (v <= x || v == y) continue;
          if (is_p4_tuple(g, x, y, u, v)) return P4Indices{x, y, u, v};
        }
      }
    }
  }
  return std::nullopt;
}

P4 p4_names(const Graph& g, const P4Indices& p) {
  return {g.name(p[0]), g.name(p[1]), g.name(p[2]), g.name(p[3])};
}

std::vector<P4> list_induced_p4s(const Graph& g) {
  std::vector<P4> out;
  for (const auto& p : induced_p4_indices(g)) out.push_back(p4_names(g, p));
  return out;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::string escape_product_component(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == ',' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  auto pair_name = [](const std::string& a, const std::string& b) {
    return escape_product_component(a) + "," + escape_product_component(b);
  };
  for (const auto& a : g.vertices()) {
    for (const auto& b : h.vertices()) names.push_back(pair_name(a, b));
  }
  for (const Edge& e : g.edges()) {
    for (const auto& b : h.vertices()) edges.emplace_back(pair_name(g.name(e.u), b), pair_name(g.name(e.v), b));
  }
  for (const Edge& e : h.edges()) {
    for (const auto& a : g.vertices()) edges.emplace_back(pair_name(a, h.name(e.u)), pair_name(a, h.name(e.v)));
  }
  return Graph(std::move(names), edges);
}

Graph hypercube(std::size_t n) {
  if (n == 0) throw InputError("hypercube dimension must be at least 1");
  if (n > 20) throw InputError("hypercube dimension too large");
  const std::size_t count = std::size_t{1} << n;
  // Most significant bit first, so numeric order and name order agree.
  auto label = [n](std::size_t code) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
      if (code >> (n - 1 - i) & 1) s[i] = '1';
    }
    return s;
  };
  std::vector<std::string> names;
  for (std::size_t c = 0; c < count; ++c) names.push_back(label(c));
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < count; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t d = c ^ (std::size_t{1} << i);
      if (c < d) edges.push_back({c, d});
    }
  }
  return Graph::from_indexed(std::move(names), std::move(edges));
}

std::string to_json(const Graph& g) {
  std::string out = "{\"vertices\": [";
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (i) out += ',';
    out += detail::quote(g.name(i));
  }
  out += "], \"edges\": [";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += ',';
    const Edge& e = g.edges()[i];
    out += '[' + detail::quote(g.name(e.u)) + ',' + detail::quote(g.name(e.v)) + ']';
  }
  out += "]}\n";
  return out;
}

Graph parse_graph_json(std::string_view text) {
  const auto j = detail::parse_json(text, "graph");
  const auto& jv = detail::require(j, "vertices", "graph");
  const auto& je = detail::require(j, "edges", "graph");
  if (!jv.is_array() || !je.is_array()) throw InputError("graph: vertices and edges must be arrays");
  std::vector<std::string> vertices;
  for (const auto& v : jv) vertices.push_back(detail::require_string(v, "graph vertex"));
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : je) {
    if (!e.is_array() || e.size() != 2) throw InputError("graph: each edge must be a pair");
    edges.emplace_back(detail::require_string(e[0], "graph edge"), detail::require_string(e[1], "graph edge"));
  }
  return Graph(std::move(vertices), edges);
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (const auto& v : g.vertices()) out << "  " << detail::dot_quote(v) << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << detail::dot_quote(g.name(e.u)) << " -- " << detail::dot_quote(g.name(e.v)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace symtree
