#pragma once

#include <cstddef>
#include <vector>

#include "symtree/cograph.hpp"
#include "symtree/graph.hpp"
#include "symtree/labeled_tree.hpp"
#include "symtree/symbolic_map.hpp"

namespace symtree {

/// Relabels every inner node by what it separates in `g`: "1" if the leaf
/// pairs having it as lca are edges, "0" otherwise. Throws
/// RepresentationError if a node is the lca of both an edge and a non-edge,
/// InputError if the leaves are not exactly the vertices of `g`.
LabeledTree relabel_to_binary(const EventTree& t, const Graph& g);

/// Inner edges (given by their child node) whose endpoints share a label,
/// ordered by the canonical form of the child subtree.
std::vector<std::size_t> contractible_edges(const LabeledTree& t);

/// Merges inner node `child` into its parent; the parent keeps its label
/// and adopts the children of `child` in its place. `child` must be an inner
/// non-root node.
LabeledTree contract_inner_edge(const LabeledTree& t, std::size_t child);

/// Contracts equal-label inner edges, first in canonical order, until none
/// is left. Leaves and all lca labels of leaf pairs are preserved.
LabeledTree contract_equal_label_edges(const LabeledTree& t);

/// Drops inner nodes with a single child, attaching the child to the parent.
LabeledTree splice_unary_nodes(const LabeledTree& t);

/// Relabel, contract and normalize: the cotree of `g` read off a symbolic
/// representation whose colors separate edges from non-edges.
Cotree to_cotree(const EventTree& t, const Graph& g);

}  // namespace symtree
