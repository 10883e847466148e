#include "symtree/tree_repr.hpp"

#include <algorithm>
#include <utility>

#include "symtree/error.hpp"

namespace symtree {

namespace {

using Node = LabeledTree::Node;

// Copies the part of `nodes` reachable from `root` into a fresh tree.
LabeledTree compact(const std::vector<Node>& nodes, std::size_t root) {
  std::vector<Node> out;
  auto copy = [&](auto&& self, std::size_t v) -> std::size_t {
    const std::size_t me = out.size();
    out.push_back({nodes[v].label, nodes[v].leaf_name, {}});
    std::vector<std::size_t> kids;
    kids.reserve(nodes[v].children.size());
    for (std::size_t c : nodes[v].children) kids.push_back(self(self, c));
    out[me].children = std::move(kids);
    return me;
  };
  copy(copy, root);
  return LabeledTree(std::move(out), 0);
}

}  // namespace

LabeledTree relabel_to_binary(const EventTree& t, const Graph& g) {
  if (t.leaf_names() != g.vertices()) throw InputError("tree leaves differ from the graph's vertices");
  auto nodes = t.nodes();
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    if (nodes[v].is_leaf()) continue;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t c : nodes[v].children) {
      auto& group = groups.emplace_back();
      for (const auto& name : t.leaves_below(c)) group.push_back(g.index_of(name));
    }
    bool edge = false;
    bool non_edge = false;
    for (std::size_t a = 0; a < groups.size(); ++a) {
      for (std::size_t b = a + 1; b < groups.size(); ++b) {
        for (std::size_t x : groups[a]) {
          for (std::size_t y : groups[b]) (g.adjacent(x, y) ? edge : non_edge) = true;
        }
      }
    }
    if (edge && non_edge) {
      throw RepresentationError("tree does not represent graph: node " + canonical_form(t, v) +
                                " is the lca of an edge and a non-edge");
    }
    nodes[v].label = edge ? "1" : "0";
  }
  return LabeledTree(std::move(nodes), t.root());
}

std::vector<std::size_t> contractible_edges(const LabeledTree& t) {
  std::vector<std::pair<std::string, std::size_t>> found;
  for (const auto& n : t.nodes()) {
    if (n.is_leaf()) continue;
    for (std::size_t c : n.children) {
      const auto& child = t.node(c);
      if (!child.is_leaf() && child.label == n.label) found.emplace_back(canonical_form(t, c), c);
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<std::size_t> out;
  out.reserve(found.size());
  for (const auto& [enc, c] : found) out.push_back(c);
  return out;
}

LabeledTree contract_inner_edge(const LabeledTree& t, std::size_t child) {
  if (child >= t.node_count() || child == t.root() || t.node(child).is_leaf()) {
    throw InputError("only an inner non-root node can be contracted into its parent");
  }
  const std::size_t parent = t.parents()[child];
  auto nodes = t.nodes();
  auto& siblings = nodes[parent].children;
  auto at = std::find(siblings.begin(), siblings.end(), child);
  const auto grandchildren = nodes[child].children;
  at = siblings.erase(at);
  siblings.insert(at, grandchildren.begin(), grandchildren.end());
  return compact(nodes, t.root());
}

LabeledTree contract_equal_label_edges(const LabeledTree& t) {
  LabeledTree current = t;
  // Each contraction removes one inner node, so this runs at most inner_count() - 1 times.
  while (true) {
    const auto edges = contractible_edges(current);
    if (edges.empty()) return current;
    current = contract_inner_edge(current, edges.front());
  }
}

LabeledTree splice_unary_nodes(const LabeledTree& t) {
  const auto& nodes = t.nodes();
  auto skip = [&](std::size_t v) {
    while (!nodes[v].is_leaf() && nodes[v].children.size() == 1) v = nodes[v].children.front();
    return v;
  };
  std::vector<Node> out;
  auto copy = [&](auto&& self, std::size_t v) -> std::size_t {
    v = skip(v);
    const std::size_t me = out.size();
    out.push_back({nodes[v].label, nodes[v].leaf_name, {}});
    std::vector<std::size_t> kids;
    for (std::size_t c : nodes[v].children) kids.push_back(self(self, c));
    out[me].children = std::move(kids);
    return me;
  };
  copy(copy, t.root());
  return LabeledTree(std::move(out), 0);
}

Cotree to_cotree(const EventTree& t, const Graph& g) {
  LabeledTree current = contract_equal_label_edges(relabel_to_binary(t, g));
  while (true) {
    LabeledTree next = contract_equal_label_edges(splice_unary_nodes(current));
    if (canonical_form(next) == canonical_form(current)) break;
    current = std::move(next);
  }
  return Cotree(std::move(current));
}

}  // namespace symtree
