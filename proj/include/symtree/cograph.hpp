#pragma once

#include <optional>
#include <string>

#include "symtree/graph.hpp"
#include "symtree/labeled_tree.hpp"

namespace symtree {

/// A canonical cotree: inner labels in {"0","1"}, at least two children per
/// inner node, and labels alternating along inner edges. A single leaf is the
/// cotree of K1.
class Cotree {
 public:
  /// Throws InputError when `tree` breaks any of the rules above.
  explicit Cotree(LabeledTree tree);

  const LabeledTree& tree() const { return tree_; }

  friend bool operator==(const Cotree& a, const Cotree& b) {
    return canonical_form(a.tree_) == canonical_form(b.tree_);
  }

 private:
  LabeledTree tree_;
};

/// Describes why `tree` is not a canonical cotree, or nullopt if it is one.
std::optional<std::string> cotree_violation(const LabeledTree& tree);

struct CographRecognition {
  std::optional<Cotree> cotree;  // set iff the graph is a cograph
  std::optional<P4> witness;     // lexicographically least induced P4 otherwise

  bool is_cograph() const { return cotree.has_value(); }
};

/// Recursive recognition: disconnected -> 0-node over components,
/// co-disconnected -> 1-node over co-components, otherwise not a cograph.
/// Throws InputError for the empty graph.
CographRecognition recognize_cograph(const Graph& g);

bool is_cograph(const Graph& g);

/// Graph on the leaf names with [x,y] an edge iff the lca of x and y is a 1-node.
Graph cotree_to_graph(const Cotree& t);
/// Validates first; throws InputError if `t` is not a canonical cotree.
Graph cotree_to_graph(const LabeledTree& t);

/// Swaps the labels 0 and 1 at every inner node (the cotree of the complement).
LabeledTree swap_cotree_labels(const LabeledTree& t);

}  // namespace symtree
