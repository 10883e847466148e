#include "symtree/labeled_tree.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "json_util.hpp"
#include "symtree/error.hpp"

namespace symtree {

LabeledTree LabeledTree::leaf(std::string name) {
  if (name.empty()) throw InputError("leaf names must be nonempty");
  LabeledTree t;
  t.nodes_.push_back({"", std::move(name), {}});
  t.root_ = 0;
  return t;
}

LabeledTree LabeledTree::inner(std::string label, std::vector<LabeledTree> children) {
  if (label.empty()) throw InputError("inner node label must be nonempty");
  if (children.empty()) throw InputError("inner node needs at least one child");
  std::vector<Node> nodes;
  nodes.push_back({std::move(label), "", {}});
  for (auto& child : children) {
    const std::size_t offset = nodes.size();
    nodes[0].children.push_back(offset + child.root_);
    for (auto& n : child.nodes_) {
      for (auto& c : n.children) c += offset;
      nodes.push_back(std::move(n));
    }
  }
  return LabeledTree(std::move(nodes), 0);
}

LabeledTree::LabeledTree(std::vector<Node> nodes, std::size_t root) : nodes_(std::move(nodes)), root_(root) {
  if (root_ >= nodes_.size()) throw InputError("tree root out of range");
  std::vector<int> indegree(nodes_.size(), 0);
  for (const auto& n : nodes_) {
    for (std::size_t c : n.children) {
      if (c >= nodes_.size()) throw InputError("tree child index out of range");
      ++indegree[c];
    }
  }
  if (indegree[root_] != 0) throw InputError("tree root has a parent");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (i != root_ && indegree[i] != 1) throw InputError("tree node without a unique parent");
  }
  // One parent per node plus a parentless root: reachability rules out cycles.
  std::vector<std::size_t> stack{root_};
  std::size_t seen = 0;
  std::set<std::string> names;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    ++seen;
    const auto& n = nodes_[v];
    if (n.is_leaf()) {
      if (n.leaf_name.empty()) throw InputError("leaf names must be nonempty");
      if (!n.label.empty()) throw InputError("leaves carry no label");
      if (!names.insert(n.leaf_name).second) throw InputError("duplicate leaf name: " + n.leaf_name);
    } else {
      if (n.label.empty()) throw InputError("inner node label must be nonempty");
      if (!n.leaf_name.empty()) throw InputError("inner node carries a leaf name");
      stack.insert(stack.end(), n.children.begin(), n.children.end());
    }
  }
  if (seen != nodes_.size()) throw InputError("tree has unreachable nodes");
}

std::size_t LabeledTree::inner_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return !n.is_leaf(); }));
}

std::vector<std::size_t> LabeledTree::parents() const {
  std::vector<std::size_t> parent(nodes_.size(), root_);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (std::size_t c : nodes_[i].children) parent[c] = i;
  }
  return parent;
}

std::vector<std::string> LabeledTree::leaf_names() const { return leaves_below(root_); }

std::optional<std::size_t> LabeledTree::find_leaf(std::string_view name) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].is_leaf() && nodes_[i].leaf_name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::string> LabeledTree::leaves_below(std::size_t node) const {
  std::vector<std::string> out;
  std::vector<std::size_t> stack{node};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (nodes_[v].is_leaf()) {
      out.push_back(nodes_[v].leaf_name);
    } else {
      stack.insert(stack.end(), nodes_[v].children.begin(), nodes_[v].children.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabeledTree LabeledTree::subtree(std::size_t node) const {
  const Node& n = nodes_.at(node);
  if (n.is_leaf()) return leaf(n.leaf_name);
  std::vector<LabeledTree> kids;
  kids.reserve(n.children.size());
  for (std::size_t c : n.children) kids.push_back(subtree(c));
  return inner(n.label, std::move(kids));
}

const std::string& lca_label(const LabeledTree& t, std::string_view x, std::string_view y) {
  if (x == y) throw InputError("lca of a leaf with itself is undefined");
  auto lx = t.find_leaf(x);
  auto ly = t.find_leaf(y);
  if (!lx) throw InputError("unknown leaf: " + std::string(x));
  if (!ly) throw InputError("unknown leaf: " + std::string(y));
  const auto parent = t.parents();
  std::vector<char> on_path(t.node_count(), 0);
  for (std::size_t v = *lx;; v = parent[v]) {
    on_path[v] = 1;
    if (v == t.root()) break;
  }
  std::size_t v = *ly;
  while (!on_path[v]) v = parent[v];
  return t.node(v).label;
}

namespace {

bool needs_quotes(std::string_view s) {
  if (s.empty()) return true;
  for (char c : s) {
    if (c == '(' || c == ')' || c == ',' || c == ';' || c == ':' || c == '\'' ||
        std::isspace(static_cast<unsigned char>(c))) {
      return true;
    }
  }
  return false;
}

std::string escape_token(std::string_view s) {
  if (!needs_quotes(s)) return std::string(s);
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += '\'';
    out += c;
  }
  out += '\'';
  return out;
}

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : text_(text) {}

  LabeledTree parse() {
    std::vector<LabeledTree::Node> nodes;
    const std::size_t root = subtree(nodes);
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ';') fail("expected ';'");
    ++pos_;
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters after ';'");
    return LabeledTree(std::move(nodes), root);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("newick: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string token() {
    skip_space();
    std::string out;
    if (pos_ < text_.size() && text_[pos_] == '\'') {
      ++pos_;
      while (true) {
        if (pos_ >= text_.size()) fail("unterminated quoted name");
        if (text_[pos_] == '\'') {
          if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '\'') {
            out += '\'';
            pos_ += 2;
            continue;
          }
          ++pos_;
          break;
        }
        out += text_[pos_++];
      }
      return out;
    }
    while (pos_ < text_.size() && !needs_quotes(std::string_view(&text_[pos_], 1))) out += text_[pos_++];
    return out;
  }

  std::size_t subtree(std::vector<LabeledTree::Node>& nodes) {
    if (++depth_ > 10000) fail("tree nested too deeply");
    skip_space();
    const std::size_t me = nodes.size();
    nodes.emplace_back();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      std::vector<std::size_t> kids;
      while (true) {
        kids.push_back(subtree(nodes));
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
      std::string label = token();
      if (label.empty()) fail("inner node without label");
      nodes[me].label = std::move(label);
      nodes[me].children = std::move(kids);
    } else {
      std::string name = token();
      if (name.empty()) fail("expected a leaf name");
      nodes[me].leaf_name = std::move(name);
    }
    --depth_;
    return me;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

std::string canonical_form(const LabeledTree& t, std::size_t node) {
  const auto& n = t.node(node);
  if (n.is_leaf()) return escape_token(n.leaf_name);
  std::vector<std::string> parts;
  parts.reserve(n.children.size());
  for (std::size_t c : n.children) parts.push_back(canonical_form(t, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  out += ')';
  out += escape_token(n.label);
  return out;
}

std::string canonical_form(const LabeledTree& t) { return canonical_form(t, t.root()); }

std::string to_newick(const LabeledTree& t) { return canonical_form(t) + ";"; }

LabeledTree parse_newick(std::string_view text) { return NewickParser(text).parse(); }

std::string tree_to_dot(const LabeledTree& t, std::string_view name) {
  // Emit in canonical child order so the rendering is independent of storage order.
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  std::size_t next_id = 0;
  auto emit = [&](auto&& self, std::size_t v) -> std::size_t {
    const std::size_t id = next_id++;
    const auto& n = t.node(v);
    if (n.is_leaf()) {
      out << "  n" << id << " [label=" << detail::dot_quote(n.leaf_name) << ", shape=plaintext];\n";
      return id;
    }
    out << "  n" << id << " [label=" << detail::dot_quote(n.label) << ", shape=circle];\n";
    std::vector<std::pair<std::string, std::size_t>> kids;
    for (std::size_t c : n.children) kids.emplace_back(canonical_form(t, c), c);
    std::sort(kids.begin(), kids.end());
    for (const auto& [enc, c] : kids) {
      const std::size_t cid = self(self, c);
      out << "  n" << id << " -> n" << cid << ";\n";
    }
    return id;
  };
  emit(emit, t.root());
  out << "}\n";
  return out.str();
}

}  // namespace symtree
