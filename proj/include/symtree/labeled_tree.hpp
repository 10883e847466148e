#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symtree {

/// Rooted tree whose leaves carry unique names and whose inner nodes carry a
/// label from some alphabet. Used for cotrees ({0,1} labels) and for event
/// trees of symbolic maps (color labels). Leaves have an empty label, which
/// plays the part of the reserved symbol for the diagonal.
///
/// Nodes live in a flat vector; a node without children is a leaf. Inner
/// nodes may have a single child (intermediate states of tree transforms);
/// canonical forms are checked by the callers that need them.
class LabeledTree {
 public:
  struct Node {
    std::string label;      // empty for leaves
    std::string leaf_name;  // empty for inner nodes
    std::vector<std::size_t> children;

    bool is_leaf() const { return children.empty(); }
  };

  static LabeledTree leaf(std::string name);
  /// Inner node over the given subtrees. Throws InputError on an empty label,
  /// no children, or leaf names repeated across subtrees.
  static LabeledTree inner(std::string label, std::vector<LabeledTree> children);

  /// Builds from raw nodes. Validates that `nodes` forms a tree rooted at
  /// `root` in which every node is reachable, plus the leaf and label rules
  /// above. Unreachable nodes are rejected.
  LabeledTree(std::vector<Node> nodes, std::size_t root);

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  std::size_t root() const { return root_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t inner_count() const;
  bool is_single_leaf() const { return nodes_[root_].is_leaf(); }

  /// Parent of every node; the root maps to itself.
  std::vector<std::size_t> parents() const;
  /// Leaf names in lexicographic order.
  std::vector<std::string> leaf_names() const;
  std::optional<std::size_t> find_leaf(std::string_view name) const;
  /// Names of the leaves below `node`, sorted.
  std::vector<std::string> leaves_below(std::size_t node) const;
  /// Copy of the subtree rooted at `node`, renumbered.
  LabeledTree subtree(std::size_t node) const;

 private:
  LabeledTree() = default;

  std::vector<Node> nodes_;
  std::size_t root_ = 0;
};

/// Label of the lowest common ancestor of two distinct leaves.
/// Throws InputError for unknown leaves or x == y.
const std::string& lca_label(const LabeledTree& t, std::string_view x, std::string_view y);

/// Child-order independent encoding: a leaf encodes as its (escaped) name,
/// an inner node as "(" + sorted child encodings joined by "," + ")" + label.
/// Two trees have equal encodings exactly when they are label-preserving
/// isomorphic with matching leaf names.
std::string canonical_form(const LabeledTree& t);
std::string canonical_form(const LabeledTree& t, std::size_t node);

/// Newick-like text: the canonical form followed by ';'.
std::string to_newick(const LabeledTree& t);
/// Parses the format produced by to_newick(); child order is free and
/// whitespace between tokens is ignored. Throws InputError.
LabeledTree parse_newick(std::string_view text);

/// Root-down DOT rendering; inner nodes show their labels.
std::string tree_to_dot(const LabeledTree& t, std::string_view name = "T");

}  // namespace symtree
