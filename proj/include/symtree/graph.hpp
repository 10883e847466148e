#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symtree {

/// Unordered vertex pair stored as indices into Graph::vertices(), u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Builds an Edge with its endpoints in increasing order.
inline Edge make_edge(std::size_t a, std::size_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Undirected simple graph on textual vertex names.
///
/// Vertices are kept sorted by name, so the index of a vertex is its rank in
/// lexicographic order and every iteration over indices is canonical. Edges
/// are kept sorted as well. The value is immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Validating constructor. Throws InputError on empty or repeated names,
  /// self-loops, duplicate edges and endpoints outside `vertices`.
  Graph(std::vector<std::string> vertices,
        std::span<const std::pair<std::string, std::string>> edges);

  /// Constructor over index pairs. `sorted_vertices` must be strictly
  /// increasing; edges may be given in any order but must be simple.
  static Graph from_indexed(std::vector<std::string> sorted_vertices, std::vector<Edge> edges);

  std::size_t order() const { return names_.size(); }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return names_.empty(); }

  const std::vector<std::string>& vertices() const { return names_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name(std::size_t v) const { return names_[v]; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Like find() but throws InputError("vertex not in graph: ...").
  std::size_t index_of(std::string_view name) const;

  bool adjacent(std::size_t a, std::size_t b) const { return a != b && adj_[a * order() + b] != 0; }
  bool has_edge(std::string_view a, std::string_view b) const;

  const std::vector<std::size_t>& neighbors(std::size_t v) const { return nbrs_[v]; }
  std::size_t degree(std::size_t v) const { return nbrs_[v].size(); }

  /// Position of `e` in edges(), if present.
  std::optional<std::size_t> edge_index(Edge e) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency();

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<char> adj_;
  std::vector<std::vector<std::size_t>> nbrs_;
};

/// Induced P4 x-y-u-v given by vertex names; the lesser endpoint comes first.
using P4 = std::array<std::string, 4>;
/// Same, as vertex indices.
using P4Indices = std::array<std::size_t, 4>;

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, std::span<const std::string> vertices);
Graph induced_subgraph_indices(const Graph& g, std::span<const std::size_t> vertices);

/// Vertex partition into connected components, each part sorted, parts
/// ordered by their least vertex.
std::vector<std::vector<std::size_t>> component_indices(const Graph& g);
std::vector<std::vector<std::string>> connected_components(const Graph& g);

/// Every induced P4, once each, canonically oriented, in lexicographic order.
std::vector<P4Indices> induced_p4_indices(const Graph& g);
std::vector<P4> list_induced_p4s(const Graph& g);
/// Lexicographically least induced P4, without enumerating the rest.
std::optional<P4Indices> least_induced_p4(const Graph& g);
P4 p4_names(const Graph& g, const P4Indices& p);

std::size_t max_degree(const Graph& g);

/// Cartesian product; vertex (a, b) is named "a,b" with ',' and '\' escaped.
Graph cartesian_product(const Graph& g, const Graph& h);
/// Q_n on bit-string names of length n. Throws InputError for n == 0.
Graph hypercube(std::size_t n);

/// Escapes ',' and '\' with a backslash so product names stay splittable.
std::string escape_product_component(std::string_view name);

/// Canonical JSON: {"vertices": [...], "edges": [[...],...]} plus newline.
std::string to_json(const Graph& g);
/// Accepts any vertex and edge order. Throws InputError on bad input.
Graph parse_graph_json(std::string_view text);
std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace symtree
