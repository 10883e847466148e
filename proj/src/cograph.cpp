#include "symtree/cograph.hpp"

#include <algorithm>
#include <vector>

#include "symtree/error.hpp"

namespace symtree {

std::optional<std::string> cotree_violation(const LabeledTree& tree) {
  for (const auto& n : tree.nodes()) {
    if (n.is_leaf()) continue;
    if (n.label != "0" && n.label != "1") return "cotree label must be 0 or 1, got '" + n.label + "'";
    if (n.children.size() < 2) return "cotree inner node with fewer than two children";
    for (std::size_t c : n.children) {
      const auto& child = tree.node(c);
      if (!child.is_leaf() && child.label == n.label) {
        return "cotree labels do not alternate (" + n.label + " above " + child.label + ")";
      }
    }
  }
  return std::nullopt;
}

Cotree::Cotree(LabeledTree tree) : tree_(std::move(tree)) {
  if (auto why = cotree_violation(tree_)) throw InputError(*why);
}

namespace {

// Components of g[subset] (complemented if `co`), as index lists into g.
std::vector<std::vector<std::size_t>> parts_of(const Graph& g, const std::vector<std::size_t>& subset, bool co) {
  std::vector<std::vector<std::size_t>> parts;
  std::vector<char> seen(subset.size(), 0);
  for (std::size_t s = 0; s < subset.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> local{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < local.size(); ++head) {
      const std::size_t a = subset[local[head]];
      for (std::size_t t = 0; t < subset.size(); ++t) {
        if (seen[t] || t == local[head]) continue;
        if (g.adjacent(a, subset[t]) != co) {
          seen[t] = 1;
          local.push_back(t);
        }
      }
    }
    auto& part = parts.emplace_back();
    for (std::size_t i : local) part.push_back(subset[i]);
    std::sort(part.begin(), part.end());
  }
  return parts;
}

std::optional<LabeledTree> build_cotree(const Graph& g, const std::vector<std::size_t>& subset) {
  if (subset.size() == 1) return LabeledTree::leaf(g.name(subset[0]));
  for (bool co : {false, true}) {
    auto parts = parts_of(g, subset, co);
    if (parts.size() < 2) continue;
    std::vector<LabeledTree> kids;
    kids.reserve(parts.size());
    for (const auto& part : parts) {
      auto kid = build_cotree(g, part);
      if (!kid) return std::nullopt;
      kids.push_back(std::move(*kid));
    }
    return LabeledTree::inner(co ? "1" : "0", std::move(kids));
  }
  return std::nullopt;
}

std::vector<std::size_t> all_vertices(const Graph& g) {
  std::vector<std::size_t> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

}  // namespace

CographRecognition recognize_cograph(const Graph& g) {
  if (g.empty()) throw InputError("cograph recognition needs a nonempty graph");
  CographRecognition out;
  if (auto tree = build_cotree(g, all_vertices(g))) {
    out.cotree.emplace(std::move(*tree));
  } else {
    auto p4 = least_induced_p4(g);
    if (!p4) throw InvariantError("recognition failed but the graph has no induced P4");
    out.witness = p4_names(g, *p4);
  }
  return out;
}

bool is_cograph(const Graph& g) { return g.empty() || build_cotree(g, all_vertices(g)).has_value(); }

Graph cotree_to_graph(const Cotree& cotree) {
  const LabeledTree& t = cotree.tree();
  std::vector<std::string> names = t.leaf_names();
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& n : t.nodes()) {
    if (n.is_leaf() || n.label != "1") continue;
    std::vector<std::vector<std::string>> groups;
    for (std::size_t c : n.children) groups.push_back(t.leaves_below(c));
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        for (const auto& a : groups[i]) {
          for (const auto& b : groups[j]) edges.emplace_back(a, b);
        }
      }
    }
  }
  return Graph(std::move(names), edges);
}

Graph cotree_to_graph(const LabeledTree& t) { return cotree_to_graph(Cotree(t)); }

LabeledTree swap_cotree_labels(const LabeledTree& t) {
  auto nodes = t.nodes();
  for (auto& n : nodes) {
    if (n.is_leaf()) continue;
    if (n.label == "0") {
      n.label = "1";
    } else if (n.label == "1") {
      n.label = "0";
    }
  }
  return LabeledTree(std::move(nodes), t.root());
}

}  // namespace symtree
