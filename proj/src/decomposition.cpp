#include "symtree/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "json_util.hpp"
#include "symtree/error.hpp"

namespace symtree {

std::string_view to_string(DecompositionKind kind) {
  return kind == DecompositionKind::partition ? "partition" : "decomposition";
}

DecompositionKind parse_decomposition_kind(std::string_view text) {
  if (text == "partition") return DecompositionKind::partition;
  if (text == "decomposition") return DecompositionKind::decomposition;
  throw InputError("unknown decomposition kind: " + std::string(text));
}

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::optimal:
      return "optimal";
    case SearchStatus::infeasible:
      return "infeasible";
    case SearchStatus::unknown:
      break;
  }
  return "unknown";
}

EdgeDecomposition::EdgeDecomposition(Graph base, std::vector<std::vector<Edge>> classes, DecompositionKind kind)
    : base_(std::move(base)), classes_(std::move(classes)), kind_(kind) {
  for (auto& cls : classes_) {
    for (auto& e : cls) {
      if (e.u >= base_.order() || e.v >= base_.order() || e.u == e.v) {
        throw InputError("decomposition edge is not a vertex pair of the base graph");
      }
      e = make_edge(e.u, e.v);
    }
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
  }
  std::sort(classes_.begin(), classes_.end());
}

Graph EdgeDecomposition::class_graph(std::size_t i) const {
  return Graph::from_indexed(base_.vertices(), classes_.at(i));
}

std::string DecompositionVerdict::describe() const {
  if (ok) return "valid";
  std::string out = reason;
  if (class_index) out += " (class " + std::to_string(*class_index) + ")";
  if (edge) out += " edge " + edge->first + "-" + edge->second;
  if (witness) out += " witness " + (*witness)[0] + "-" + (*witness)[1] + "-" + (*witness)[2] + "-" + (*witness)[3];
  return out;
}

DecompositionVerdict validate(const EdgeDecomposition& d) {
  const Graph& g = d.base();
  auto fail = [&](std::string reason, std::optional<std::size_t> cls, std::optional<Edge> e) {
    DecompositionVerdict v;
    v.ok = false;
    v.reason = std::move(reason);
    v.class_index = cls;
    if (e) v.edge = std::make_pair(g.name(e->u), g.name(e->v));
    return v;
  };
  std::vector<int> cover(g.size(), 0);
  for (std::size_t i = 0; i < d.class_count(); ++i) {
    if (d.classes()[i].empty()) return fail("empty class", i, std::nullopt);
    for (const Edge& e : d.classes()[i]) {
      auto idx = g.edge_index(e);
      if (!idx) return fail("class edge not in base graph", i, e);
      ++cover[*idx];
    }
  }
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (cover[k] == 0) return fail("edge not covered", std::nullopt, g.edges()[k]);
    if (d.kind() == DecompositionKind::partition && cover[k] > 1) {
      return fail("edge in more than one class", std::nullopt, g.edges()[k]);
    }
  }
  for (std::size_t i = 0; i < d.class_count(); ++i) {
    const Graph cls = d.class_graph(i);
    if (!is_cograph(cls)) {
      DecompositionVerdict v = fail("class is not a cograph", i, std::nullopt);
      v.witness = p4_names(cls, *least_induced_p4(cls));
      return v;
    }
  }
  return {};
}

bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& coloring) {
  if (coloring.size() != g.size()) return false;
  std::vector<std::vector<std::size_t>> seen(g.order());
  for (std::size_t k = 0; k < g.size(); ++k) {
    for (std::size_t end : {g.edges()[k].u, g.edges()[k].v}) {
      auto& s = seen[end];
      if (std::find(s.begin(), s.end(), coloring[k]) != s.end()) return false;
      s.push_back(coloring[k]);
    }
  }
  return true;
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Incremental edge coloring state for the fan/path recoloring scheme.
class MisraGries {
 public:
  explicit MisraGries(const Graph& g)
      : g_(g), n_(g.order()), palette_(max_degree(g) + 1), color_(n_ * n_, kNone), at_(n_ * palette_, kNone) {}

  EdgeColoring run() {
    for (const Edge& e : g_.edges()) color_edge(e.u, e.v);
    EdgeColoring out;
    out.reserve(g_.size());
    for (const Edge& e : g_.edges()) out.push_back(color_[e.u * n_ + e.v]);
    return out;
  }

 private:
  std::size_t color(std::size_t a, std::size_t b) const { return color_[a * n_ + b]; }
  bool free_at(std::size_t x, std::size_t c) const { return at_[x * palette_ + c] == kNone; }

  std::size_t least_free(std::size_t x) const {
    for (std::size_t c = 0; c < palette_; ++c) {
      if (free_at(x, c)) return c;
    }
    throw InvariantError("no free color at a vertex");
  }

  void set(std::size_t a, std::size_t b, std::size_t c) {
    color_[a * n_ + b] = color_[b * n_ + a] = c;
    at_[a * palette_ + c] = b;
    at_[b * palette_ + c] = a;
  }

  void unset(std::size_t a, std::size_t b) {
    const std::size_t c = color(a, b);
    if (c == kNone) return;
    at_[a * palette_ + c] = kNone;
    at_[b * palette_ + c] = kNone;
    color_[a * n_ + b] = color_[b * n_ + a] = kNone;
  }

  std::vector<std::size_t> maximal_fan(std::size_t u, std::size_t v) const {
    std::vector<std::size_t> fan{v};
    while (true) {
      bool grown = false;
      for (std::size_t c = 0; c < palette_ && !grown; ++c) {
        if (!free_at(fan.back(), c)) continue;
        const std::size_t w = at_[u * palette_ + c];
        if (w == kNone || std::find(fan.begin(), fan.end(), w) != fan.end()) continue;
        fan.push_back(w);
        grown = true;
      }
      if (!grown) return fan;
    }
  }

  bool is_fan(std::size_t u, const std::vector<std::size_t>& fan, std::size_t len) const {
    for (std::size_t j = 1; j < len; ++j) {
      const std::size_t c = color(u, fan[j]);
      if (c == kNone || !free_at(fan[j - 1], c)) return false;
    }
    return true;
  }

  // Swaps c and d along the maximal path through u that alternates d, c, d, ...
  void invert_path(std::size_t u, std::size_t c, std::size_t d) {
    std::vector<std::pair<std::size_t, std::size_t>> path;
    std::size_t x = u;
    std::size_t want = d;
    while (true) {
      const std::size_t y = at_[x * palette_ + want];
      if (y == kNone) break;
      path.emplace_back(x, y);
      x = y;
      want = want == d ? c : d;
    }
    std::vector<std::size_t> old;
    for (const auto& [a, b] : path) {
      old.push_back(color(a, b));
      unset(a, b);
    }
    for (std::size_t i = 0; i < path.size(); ++i) set(path[i].first, path[i].second, old[i] == c ? d : c);
  }

  void color_edge(std::size_t u, std::size_t v) {
    const auto fan = maximal_fan(u, v);
    const std::size_t c = least_free(u);
    const std::size_t d = least_free(fan.back());
    if (c != d) invert_path(u, c, d);
    std::size_t w = kNone;
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (free_at(fan[i], d) && is_fan(u, fan, i + 1)) {
        w = i;
        break;
      }
    }
    if (w == kNone) throw InvariantError("fan rotation found no vertex with the free color");
    std::vector<std::size_t> shifted;
    for (std::size_t j = 0; j < w; ++j) shifted.push_back(color(u, fan[j + 1]));
    shifted.push_back(d);
    for (std::size_t j = 0; j <= w; ++j) unset(u, fan[j]);
    for (std::size_t j = 0; j <= w; ++j) set(u, fan[j], shifted[j]);
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t palette_;
  std::vector<std::size_t> color_;  // n x n, kNone when uncolored
  std::vector<std::size_t> at_;     // n x palette, neighbor along that color
};

Graph union_graph(const Graph& base, const std::vector<const std::vector<Edge>*>& parts) {
  std::vector<Edge> edges;
  for (const auto* p : parts) edges.insert(edges.end(), p->begin(), p->end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_indexed(base.vertices(), std::move(edges));
}

std::vector<Edge> merged(const std::vector<std::vector<Edge>>& classes, const std::vector<std::size_t>& which) {
  std::vector<Edge> edges;
  for (std::size_t i : which) edges.insert(edges.end(), classes[i].begin(), classes[i].end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

void merge_into_first(std::vector<std::vector<Edge>>& classes, const std::vector<std::size_t>& which) {
  auto unioned = merged(classes, which);
  classes[which.front()] = std::move(unioned);
  for (auto it = which.rbegin(); it != which.rend() - 1; ++it) classes.erase(classes.begin() + *it);
}

bool pairwise_pass(const Graph& base, std::vector<std::vector<Edge>>& classes) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (is_cograph(union_graph(base, {&classes[i], &classes[j]}))) {
        merge_into_first(classes, {i, j});
        return true;
      }
    }
  }
  return false;
}

bool subset_pass(const Graph& base, std::vector<std::vector<Edge>>& classes) {
  const std::size_t k = classes.size();
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << k); ++m) {
    if (std::popcount(m) > 2) masks.push_back(m);
  }
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  for (std::uint32_t m : masks) {
    std::vector<std::size_t> which;
    std::vector<const std::vector<Edge>*> parts;
    for (std::size_t i = 0; i < k; ++i) {
      if (m >> i & 1) {
        which.push_back(i);
        parts.push_back(&classes[i]);
      }
    }
    if (is_cograph(union_graph(base, parts))) {
      merge_into_first(classes, which);
      return true;
    }
  }
  return false;
}

}  // namespace

EdgeColoring proper_edge_coloring(const Graph& g) {
  if (g.size() == 0) return {};
  EdgeColoring out = MisraGries(g).run();
  if (!is_proper_edge_coloring(g, out)) throw InvariantError("edge coloring is not proper");
  return out;
}

EdgeDecomposition coloring_to_partition(const Graph& g, const EdgeColoring& coloring) {
  if (!is_proper_edge_coloring(g, coloring)) throw InputError("edge coloring is not proper");
  std::vector<std::size_t> used(coloring.begin(), coloring.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<std::vector<Edge>> classes(used.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto slot = std::lower_bound(used.begin(), used.end(), coloring[k]) - used.begin();
    classes[static_cast<std::size_t>(slot)].push_back(g.edges()[k]);
  }
  return EdgeDecomposition(g, std::move(classes), DecompositionKind::partition);
}

CoarsenResult coarsen(const EdgeDecomposition& d) {
  if (auto v = validate(d); !v.ok) throw InputError("coarsen needs a valid decomposition: " + v.describe());
  auto classes = d.classes();
  while (true) {
    while (pairwise_pass(d.base(), classes)) {
    }
    if (classes.size() > kExactCoarsenLimit || !subset_pass(d.base(), classes)) break;
  }
  const bool exact = classes.size() <= kExactCoarsenLimit;
  return {EdgeDecomposition(d.base(), std::move(classes), d.kind()), exact};
}

CotreeSet to_cotree_set(const EdgeDecomposition& d) {
  if (auto v = validate(d); !v.ok) throw InputError("cotree set needs a valid decomposition: " + v.describe());
  CotreeSet out;
  out.vertices = d.base().vertices();
  if (d.base().empty()) return out;
  for (std::size_t i = 0; i < d.class_count(); ++i) out.trees.push_back(*recognize_cograph(d.class_graph(i)).cotree);
  return out;
}

bool represents(const CotreeSet& ts, const Graph& g) {
  if (ts.vertices != g.vertices()) throw InputError("cotree set and graph have different vertex sets");
  std::vector<char> covered(g.size(), 0);
  for (const auto& t : ts.trees) {
    if (t.tree().leaf_names() != g.vertices()) throw InputError("cotree leaf set differs from the graph");
    const Graph h = cotree_to_graph(t);
    for (const Edge& e : h.edges()) {
      auto idx = g.edge_index(e);
      if (!idx) return false;
      covered[*idx] = 1;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

namespace {

using ClassMask = std::uint32_t;
constexpr std::size_t kMaxClasses = 20;

// Backtracking over edge-to-class assignments with induced-P4 pruning.
class DecompositionSearch {
 public:
  DecompositionSearch(const Graph& g, DecompositionKind kind, const SearchBudget& budget)
      : g_(g), kind_(kind), budget_(budget), start_(std::chrono::steady_clock::now()) {
    build_order();
    build_patterns();
  }

  // Runs the search for exactly `k` usable classes. `visit` is called on each
  // complete assignment using all k classes, with masks indexed like
  // g.edges(); it returns whether to go on. Returns false if the budget ran out.
  bool run(std::size_t k, const std::function<bool(const std::vector<ClassMask>&)>& visit) {
    k_ = k;
    build_options();
    mask_.assign(g_.size(), 0);
    by_edge_.assign(g_.size(), 0);
    visit_ = &visit;
    stopped_ = false;
    exhausted_ = false;
    descend(0, 0);
    return !exhausted_;
  }

  bool stopped() const { return stopped_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Pattern {
    std::array<std::size_t, 3> path;
    std::array<std::size_t, 3> chords;  // edge indices, kNone for non-edges
  };

  // Edges are visited in breadth-first order of their later endpoint, so
  // that the edges of a potential P4 are assigned close together.
  void build_order() {
    const std::size_t n = g_.order();
    std::vector<std::size_t> rank(n, kNone);
    std::size_t next = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (rank[s] != kNone) continue;
      std::vector<std::size_t> queue{s};
      rank[s] = next++;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (std::size_t w : g_.neighbors(queue[q])) {
          if (rank[w] == kNone) {
            rank[w] = next++;
            queue.push_back(w);
          }
        }
      }
    }
    order_.resize(g_.size());
    for (std::size_t e = 0; e < g_.size(); ++e) order_[e] = e;
    auto key = [&](std::size_t e) {
      const std::size_t a = rank[g_.edges()[e].u];
      const std::size_t b = rank[g_.edges()[e].v];
      return std::pair{std::max(a, b), std::min(a, b)};
    };
    std::sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) { return key(x) < key(y); });
    pos_.assign(g_.size(), 0);
    for (std::size_t p = 0; p < order_.size(); ++p) pos_[order_[p]] = p;
  }

  void build_patterns() {
    patterns_at_.assign(g_.size(), {});
    auto edge_id = [&](std::size_t a, std::size_t b) -> std::size_t {
      if (!g_.adjacent(a, b)) return kNone;
      return pos_[*g_.edge_index(make_edge(a, b))];
    };
    for (std::size_t k = 0; k < g_.size(); ++k) {
      const Edge& e = g_.edges()[order_[k]];
      for (int flip = 0; flip < 2; ++flip) {
        const std::size_t y = flip ? e.v : e.u;
        const std::size_t u = flip ? e.u : e.v;
        for (std::size_t x : g_.neighbors(y)) {
          if (x == u) continue;
          for (std::size_t v : g_.neighbors(u)) {
            if (v == y || v == x || v <= x) continue;
            Pattern p{{edge_id(x, y), k, edge_id(u, v)}, {edge_id(x, u), edge_id(x, v), edge_id(y, v)}};
            std::size_t trigger = std::max({p.path[0], p.path[1], p.path[2]});
            for (std::size_t c : p.chords) {
              if (c != kNone) trigger = std::max(trigger, c);
            }
            patterns_at_[trigger].push_back(p);
          }
        }
      }
    }
  }

  void build_options() {
    options_.assign(k_ + 1, {});
    for (std::size_t opened = 0; opened <= k_; ++opened) {
      auto& opts = options_[opened];
      if (kind_ == DecompositionKind::partition) {
        for (std::size_t c = 0; c < k_ && c <= opened; ++c) opts.push_back(ClassMask{1} << c);
        continue;
      }
      for (ClassMask m = 1; m < (ClassMask{1} << k_); ++m) {
        // New classes must be the next unopened ones, in order.
        const ClassMask fresh = m >> opened;
        if ((fresh & (fresh + 1)) != 0) continue;
        opts.push_back(m);
      }
      std::stable_sort(opts.begin(), opts.end(), [](ClassMask a, ClassMask b) {
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
        // Lexicographic on the sorted member lists: lowest differing bit decides.
        const ClassMask diff = a ^ b;
        const ClassMask low = diff & (~diff + 1);
        return (a & low) != 0;
      });
    }
  }

  bool violates(std::size_t edge) const {
    for (const Pattern& p : patterns_at_[edge]) {
      ClassMask common = mask_[p.path[0]] & mask_[p.path[1]] & mask_[p.path[2]];
      if (!common) continue;
      for (std::size_t c : p.chords) {
        if (c != kNone) common &= ~mask_[c];
      }
      if (common) return true;
    }
    return false;
  }

  bool out_of_budget() {
    if (nodes_ > budget_.max_nodes) return true;
    if (budget_.time_limit && (nodes_ & 0x3ff) == 0) {
      if (std::chrono::steady_clock::now() - start_ > *budget_.time_limit) return true;
    }
    return false;
  }

  void descend(std::size_t edge, std::size_t opened) {
    if (edge == g_.size()) {
      if (opened != k_) return;
      for (std::size_t p = 0; p < mask_.size(); ++p) by_edge_[order_[p]] = mask_[p];
      if (!(*visit_)(by_edge_)) stopped_ = true;
      return;
    }
    // Classes still to open need at least one edge each.
    if (k_ - opened > g_.size() - edge && kind_ == DecompositionKind::partition) return;
    for (ClassMask m : options_[opened]) {
      ++nodes_;
      if (out_of_budget()) {
        exhausted_ = true;
        return;
      }
      mask_[edge] = m;
      if (!violates(edge)) {
        const std::size_t now_open = std::max<std::size_t>(opened, std::bit_width(m));
        descend(edge + 1, now_open);
      }
      if (stopped_ || exhausted_) break;
    }
    mask_[edge] = 0;
  }

  const Graph& g_;
  DecompositionKind kind_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::size_t k_ = 0;
  std::vector<std::vector<Pattern>> patterns_at_;
  std::vector<std::vector<ClassMask>> options_;
  std::vector<std::size_t> order_;  // search position -> edge index
  std::vector<std::size_t> pos_;    // edge index -> search position
  std::vector<ClassMask> mask_;     // by search position
  std::vector<ClassMask> by_edge_;
  const std::function<bool(const std::vector<ClassMask>&)>* visit_ = nullptr;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  bool exhausted_ = false;
};

EdgeDecomposition decode_masks(const Graph& g, DecompositionKind kind, std::size_t k,
                               const std::vector<ClassMask>& masks) {
  std::vector<std::vector<Edge>> classes(k);
  for (std::size_t e = 0; e < g.size(); ++e) {
    for (std::size_t c = 0; c < k; ++c) {
      if (masks[e] >> c & 1) classes[c].push_back(g.edges()[e]);
    }
  }
  return EdgeDecomposition(g, std::move(classes), kind);
}

}  // namespace

ExactDecompositionResult exact_min_decomposition(const Graph& g, DecompositionKind kind, std::size_t k_max,
                                                 const SearchBudget& budget) {
  ExactDecompositionResult out;
  if (g.size() == 0) {
    out.status = SearchStatus::optimal;
    out.witness.emplace(g, std::vector<std::vector<Edge>>{}, kind);
    return out;
  }
  if (k_max > kMaxClasses) k_max = kMaxClasses;
  DecompositionSearch search(g, kind, budget);
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::optional<std::vector<ClassMask>> found;
    const bool finished = search.run(k, [&](const std::vector<ClassMask>& masks) {
      found = masks;
      return false;
    });
    out.nodes = search.nodes();
    if (found) {
      out.status = SearchStatus::optimal;
      out.k = k;
      out.witness = decode_masks(g, kind, k, *found);
      return out;
    }
    if (!finished) {
      out.status = SearchStatus::unknown;
      return out;
    }
  }
  out.status = SearchStatus::infeasible;
  return out;
}

EnumerationResult enumerate_decompositions(const Graph& g, DecompositionKind kind, std::size_t k,
                                           const std::function<bool(const EdgeDecomposition&)>& visit,
                                           const SearchBudget& budget) {
  if (k == 0 || k > kMaxClasses) throw InputError("class count out of range");
  EnumerationResult out;
  DecompositionSearch search(g, kind, budget);
  // Classes opened by the same edge are interchangeable, so the search can
  // reach one decomposition in several class orders; keep the first.
  std::set<std::vector<std::vector<Edge>>> seen;
  const bool finished = search.run(k, [&](const std::vector<ClassMask>& masks) {
    EdgeDecomposition d = decode_masks(g, kind, k, masks);
    if (!seen.insert(d.classes()).second) return true;
    ++out.count;
    return visit(d);
  });
  out.nodes = search.nodes();
  out.complete = finished && !search.stopped();
  return out;
}

std::string to_json(const EdgeDecomposition& d) {
  const Graph& g = d.base();
  std::string out = "{\"kind\":" + detail::quote(to_string(d.kind())) + ",\"classes\":[";
  for (std::size_t i = 0; i < d.class_count(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < d.classes()[i].size(); ++j) {
      if (j) out += ',';
      const Edge& e = d.classes()[i][j];
      out += '[' + detail::quote(g.name(e.u)) + ',' + detail::quote(g.name(e.v)) + ']';
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

EdgeDecomposition parse_decomposition_json(std::string_view text, const Graph& base) {
  const auto j = detail::parse_json(text, "decomposition");
  const auto kind = parse_decomposition_kind(detail::require_string(detail::require(j, "kind", "decomposition"), "kind"));
  const auto& jc = detail::require(j, "classes", "decomposition");
  if (!jc.is_array()) throw InputError("decomposition: classes must be an array");
  std::vector<std::vector<Edge>> classes;
  for (const auto& cls : jc) {
    if (!cls.is_array()) throw InputError("decomposition: each class must be an array of edges");
    auto& out = classes.emplace_back();
    for (const auto& e : cls) {
      if (!e.is_array() || e.size() != 2) throw InputError("decomposition: each edge must be a pair");
      out.push_back(make_edge(base.index_of(detail::require_string(e[0], "edge")),
                              base.index_of(detail::require_string(e[1], "edge"))));
    }
  }
  return EdgeDecomposition(base, std::move(classes), kind);
}

std::string to_dot(const EdgeDecomposition& d, std::string_view name) {
  static constexpr std::string_view kColors[] = {"black", "red", "blue", "darkgreen", "orange", "purple",
                                                 "brown", "cyan", "magenta", "gray"};
  static constexpr std::string_view kStyles[] = {"solid", "dashed", "dotted", "bold"};
  const Graph& g = d.base();
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (const auto& v : g.vertices()) out << "  " << detail::dot_quote(v) << ";\n";
  for (std::size_t i = 0; i < d.class_count(); ++i) {
    const auto color = kColors[i % std::size(kColors)];
    const auto style = kStyles[(i / std::size(kColors)) % std::size(kStyles)];
    for (const Edge& e : d.classes()[i]) {
      out << "  " << detail::dot_quote(g.name(e.u)) << " -- " << detail::dot_quote(g.name(e.v)) << " [color=" << color
          << ", style=" << style << ", label=\"" << i + 1 << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace symtree
