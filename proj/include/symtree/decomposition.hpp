#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symtree/cograph.hpp"
#include "symtree/graph.hpp"

namespace symtree {

enum class DecompositionKind { decomposition, partition };

std::string_view to_string(DecompositionKind kind);
/// Accepts "decomposition" or "partition"; throws InputError otherwise.
DecompositionKind parse_decomposition_kind(std::string_view text);

/// Ordered collection of edge classes over a base graph.
///
/// The constructor only normalizes: each class is sorted and deduplicated
/// and classes are ordered lexicographically. Whether the classes cover the
/// base graph, are disjoint and induce cographs is for validate() to decide.
class EdgeDecomposition {
 public:
  /// Throws InputError if an edge endpoint is not a vertex index of `base`.
  EdgeDecomposition(Graph base, std::vector<std::vector<Edge>> classes, DecompositionKind kind);

  const Graph& base() const { return base_; }
  const std::vector<std::vector<Edge>>& classes() const { return classes_; }
  DecompositionKind kind() const { return kind_; }
  std::size_t class_count() const { return classes_.size(); }

  /// The spanning subgraph (V, E_i).
  Graph class_graph(std::size_t i) const;

  friend bool operator==(const EdgeDecomposition&, const EdgeDecomposition&) = default;

 private:
  Graph base_;
  std::vector<std::vector<Edge>> classes_;
  DecompositionKind kind_;
};

struct DecompositionVerdict {
  bool ok = true;
  std::string reason;                      // empty when ok
  std::optional<std::size_t> class_index;  // offending class, if any
  std::optional<std::pair<std::string, std::string>> edge;
  std::optional<P4> witness;               // induced P4 inside the class

  std::string describe() const;
};

/// Structural checks (nonempty classes, base edges only, coverage, and
/// disjointness for partitions), then one cograph test per class.
DecompositionVerdict validate(const EdgeDecomposition& d);

/// Color per edge, aligned with g.edges().
using EdgeColoring = std::vector<std::size_t>;

bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& coloring);

/// Misra-Gries fan rotation: proper, at most max_degree(g) + 1 colors.
/// Free-color choices take the smallest index.
EdgeColoring proper_edge_coloring(const Graph& g);

/// One partition class per used color, in color order. Throws InputError if
/// the coloring is not proper or does not match g.edges().
EdgeDecomposition coloring_to_partition(const Graph& g, const EdgeColoring& coloring);

struct CoarsenResult {
  EdgeDecomposition decomposition;
  /// True when every subset of the final classes was tested (at most
  /// kExactCoarsenLimit classes after pairwise merging); false when only
  /// pairwise merges were checked.
  bool subset_exact = false;
};

inline constexpr std::size_t kExactCoarsenLimit = 12;

/// Merges classes while the union still induces a cograph: pairwise
/// first-fit to a fixpoint, then over all subsets when few classes remain.
/// Throws InputError if `d` does not validate.
CoarsenResult coarsen(const EdgeDecomposition& d);

/// A set of cotrees on a common leaf set.
struct CotreeSet {
  std::vector<std::string> vertices;
  std::vector<Cotree> trees;
};

/// The cotree of each class graph. Throws InputError if `d` does not validate.
CotreeSet to_cotree_set(const EdgeDecomposition& d);

/// True iff every edge of `g` is a 1-pair in some tree and every 1-pair of
/// every tree is an edge of `g`. Throws InputError on leaf-set mismatch.
bool represents(const CotreeSet& ts, const Graph& g);

enum class SearchStatus { optimal, infeasible, unknown };

std::string_view to_string(SearchStatus status);

/// Search limits: explored nodes and, optionally, wall-clock time.
struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  std::optional<std::chrono::milliseconds> time_limit;
};

struct ExactDecompositionResult {
  SearchStatus status = SearchStatus::unknown;
  std::size_t k = 0;                          // optimum when status == optimal
  std::optional<EdgeDecomposition> witness;   // set when optimal
  std::uint64_t nodes = 0;
};

/// Least k <= k_max with a cograph k-decomposition (or k-partition), by
/// backtracking over edges in canonical order. A class may be opened only
/// after all lower classes; in decomposition mode an edge takes a nonempty
/// class subset, smaller subsets first. Running out of budget yields
/// `unknown`, distinct from `infeasible`. Edgeless graphs have optimum 0.
ExactDecompositionResult exact_min_decomposition(const Graph& g, DecompositionKind kind, std::size_t k_max,
                                                 const SearchBudget& budget = {});

struct EnumerationResult {
  bool complete = false;  // false if the budget ran out or the callback stopped
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
};

/// Calls `visit` once per decomposition with exactly k nonempty classes, up
/// to class order. Returning false from `visit` stops the enumeration.
EnumerationResult enumerate_decompositions(const Graph& g, DecompositionKind kind, std::size_t k,
                                           const std::function<bool(const EdgeDecomposition&)>& visit,
                                           const SearchBudget& budget = {});

/// {"kind":"partition","classes":[[["a","b"],...],...]} plus newline.
std::string to_json(const EdgeDecomposition& d);
EdgeDecomposition parse_decomposition_json(std::string_view text, const Graph& base);
/// One DOT edge style per class; edges in several classes appear once per class.
std::string to_dot(const EdgeDecomposition& d, std::string_view name = "G");

}  // namespace symtree
