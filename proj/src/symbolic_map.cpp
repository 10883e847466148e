#include "symtree/symbolic_map.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "json_util.hpp"
#include "symtree/cograph.hpp"
#include "symtree/error.hpp"

namespace symtree {

namespace {

constexpr std::string_view kReservedColor = "\xE2\x88\x85";  // the empty-set sign

void check_sorted_unique(const std::vector<std::string>& v, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].empty()) throw InputError(std::string(what) + " names must be nonempty");
    if (i > 0 && !(v[i - 1] < v[i])) throw InputError(std::string("duplicate ") + what + ": " + v[i]);
  }
}

}  // namespace

SymbolicMap::SymbolicMap(std::vector<std::string> elements, std::vector<std::string> colors,
                         std::span<const PairColor> pairs) {
  std::sort(elements.begin(), elements.end());
  std::sort(colors.begin(), colors.end());
  check_sorted_unique(elements, "element");
  check_sorted_unique(colors, "color");
  elements_ = std::move(elements);
  colors_ = std::move(colors);
  validate_colors();
  constexpr auto unset = std::numeric_limits<std::uint16_t>::max();
  values_.assign(elements_.size() * (elements_.size() - (elements_.empty() ? 0 : 1)) / 2, unset);
  for (const auto& p : pairs) {
    auto i = find_element(p.x);
    auto j = find_element(p.y);
    if (!i || !j) throw InputError("pair references unknown element: " + (i ? p.y : p.x));
    if (*i == *j) throw InputError("diagonal pair (" + p.x + "," + p.y + ") must not be given");
    auto c = find_color(p.color);
    if (!c) throw InputError("pair uses unknown color: " + p.color);
    auto& slot = values_[pair_index(*i, *j)];
    if (slot != unset) throw InputError("pair given twice: (" + p.x + "," + p.y + ")");
    slot = *c;
  }
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      if (values_[pair_index(i, j)] == unset) {
        throw InputError("map is not total: missing pair (" + elements_[i] + "," + elements_[j] + ")");
      }
    }
  }
}

SymbolicMap SymbolicMap::from_indexed(std::vector<std::string> sorted_elements,
                                      std::vector<std::string> sorted_colors, std::vector<std::uint16_t> values) {
  check_sorted_unique(sorted_elements, "element");
  check_sorted_unique(sorted_colors, "color");
  SymbolicMap d;
  d.elements_ = std::move(sorted_elements);
  d.colors_ = std::move(sorted_colors);
  d.validate_colors();
  const std::size_t n = d.elements_.size();
  if (values.size() != (n < 2 ? 0 : n * (n - 1) / 2)) throw InputError("wrong number of pair values");
  for (auto v : values) {
    if (v >= d.colors_.size()) throw InputError("pair value out of color range");
  }
  d.values_ = std::move(values);
  return d;
}

void SymbolicMap::validate_colors() const {
  if (colors_.size() >= std::numeric_limits<std::uint16_t>::max()) throw InputError("too many colors");
  for (const auto& c : colors_) {
    if (c == kReservedColor) throw InputError("color name is reserved for the diagonal");
  }
}

std::size_t SymbolicMap::pair_index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  const std::size_t n = elements_.size();
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

const std::string& SymbolicMap::at(std::string_view x, std::string_view y) const {
  auto i = find_element(x);
  auto j = find_element(y);
  if (!i || !j) throw InputError("unknown element: " + std::string(i ? y : x));
  if (*i == *j) throw InputError("diagonal has no color");
  return color_name(*i, *j);
}

std::optional<std::size_t> SymbolicMap::find_element(std::string_view name) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), name,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == elements_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::optional<std::uint16_t> SymbolicMap::find_color(std::string_view name) const {
  auto it = std::lower_bound(colors_.begin(), colors_.end(), name,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == colors_.end() || *it != name) return std::nullopt;
  return static_cast<std::uint16_t>(it - colors_.begin());
}

std::string UltrametricVerdict::describe() const {
  if (ok) return "symbolic ultrametric";
  std::string out = "violates " + rule + " on {";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ',';
    out += subset[i];
  }
  out += '}';
  if (!color.empty()) out += " in color " + color;
  return out;
}

namespace {

std::optional<std::array<std::size_t, 3>> three_colored_triangle(const SymbolicMap& d) {
  const std::size_t n = d.element_count();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t z = y + 1; z < n; ++z) {
        const auto a = d.color_of(x, y);
        const auto b = d.color_of(x, z);
        const auto c = d.color_of(y, z);
        if (a != b && a != c && b != c) return std::array{x, y, z};
      }
    }
  }
  return std::nullopt;
}

UltrametricVerdict triangle_failure(const SymbolicMap& d, const std::array<std::size_t, 3>& t, std::string rule) {
  UltrametricVerdict v;
  v.ok = false;
  v.rule = std::move(rule);
  for (std::size_t i : t) v.subset.push_back(d.elements()[i]);
  return v;
}

}  // namespace

UltrametricVerdict check_axioms(const SymbolicMap& d) {
  if (auto t = three_colored_triangle(d)) return triangle_failure(d, *t, "U2");
  const std::size_t n = d.element_count();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t e = c + 1; e < n; ++e) {
          std::array<std::size_t, 4> r{a, b, c, e};
          do {
            const auto [x, y, u, v] = r;
            const auto path = d.color_of(x, y);
            const auto rest = d.color_of(y, v);
            if (path != rest && d.color_of(y, u) == path && d.color_of(u, v) == path &&
                d.color_of(x, v) == rest && d.color_of(x, u) == rest) {
              UltrametricVerdict out;
              out.ok = false;
              out.rule = "U3";
              for (std::size_t i : r) out.subset.push_back(d.elements()[i]);
              return out;
            }
          } while (std::next_permutation(r.begin(), r.end()));
        }
      }
    }
  }
  return {};
}

Graph mono_subgraph(const SymbolicMap& d, std::string_view color) {
  auto c = d.find_color(color);
  if (!c) throw InputError("unknown color: " + std::string(color));
  std::vector<Edge> edges;
  const std::size_t n = d.element_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d.color_of(i, j) == *c) edges.push_back({i, j});
    }
  }
  return Graph::from_indexed(d.elements(), std::move(edges));
}

UltrametricVerdict check_characterization(const SymbolicMap& d) {
  if (auto t = three_colored_triangle(d)) return triangle_failure(d, *t, "U2'");
  if (d.element_count() == 0) return {};
  for (const auto& color : d.colors()) {
    const auto rec = recognize_cograph(mono_subgraph(d, color));
    if (!rec.is_cograph()) {
      UltrametricVerdict out;
      out.ok = false;
      out.rule = "U3'";
      out.subset.assign(rec.witness->begin(), rec.witness->end());
      out.color = color;
      return out;
    }
  }
  return {};
}

namespace {

// Components of the graph on `subset` whose edges are the pairs not colored `m`.
std::vector<std::vector<std::size_t>> split_by_color(const SymbolicMap& d, const std::vector<std::size_t>& subset,
                                                     std::uint16_t m) {
  std::vector<std::vector<std::size_t>> parts;
  std::vector<char> seen(subset.size(), 0);
  for (std::size_t s = 0; s < subset.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> local{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < local.size(); ++head) {
      for (std::size_t t = 0; t < subset.size(); ++t) {
        if (seen[t] || t == local[head]) continue;
        if (d.color_of(subset[local[head]], subset[t]) != m) {
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

EventTree represent(const SymbolicMap& d, const std::vector<std::size_t>& subset) {
  if (subset.size() == 1) return LabeledTree::leaf(d.elements()[subset[0]]);
  std::optional<std::uint16_t> chosen;
  std::vector<std::vector<std::size_t>> parts;
  for (std::uint16_t m = 0; m < d.colors().size(); ++m) {
    auto split = split_by_color(d, subset, m);
    if (split.size() < 2) continue;
    if (chosen) {
      throw InvariantError("two colors (" + d.colors()[*chosen] + ", " + d.colors()[m] +
                           ") both disconnect the same element set");
    }
    chosen = m;
    parts = std::move(split);
  }
  if (!chosen) {
    std::string set;
    for (std::size_t i : subset) set += (set.empty() ? "" : ",") + d.elements()[i];
    throw NotUltrametricError("not a symbolic ultrametric: no color separates {" + set + "}");
  }
  std::vector<LabeledTree> kids;
  kids.reserve(parts.size());
  for (const auto& part : parts) kids.push_back(represent(d, part));
  return LabeledTree::inner(d.colors()[*chosen], std::move(kids));
}

}  // namespace

EventTree build_representation(const SymbolicMap& d) {
  if (d.element_count() == 0) throw InputError("symbolic map has no elements");
  std::vector<std::size_t> all(d.element_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  EventTree t = represent(d, all);
  if (evaluate_representation(t, d.colors()) != d) {
    throw InvariantError("built tree does not reproduce the symbolic map");
  }
  return t;
}

SymbolicMap evaluate_representation(const EventTree& t, std::vector<std::string> alphabet) {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  auto elements = t.leaf_names();
  const std::size_t n = elements.size();
  std::vector<std::uint16_t> values(n < 2 ? 0 : n * (n - 1) / 2, 0);
  auto index_of = [&](const std::string& name) {
    return static_cast<std::size_t>(std::lower_bound(elements.begin(), elements.end(), name) - elements.begin());
  };
  auto pair_index = [n](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
  };
  for (const auto& node : t.nodes()) {
    if (node.is_leaf()) continue;
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), node.label);
    if (it == alphabet.end() || *it != node.label) throw InputError("tree label not in alphabet: " + node.label);
    const auto color = static_cast<std::uint16_t>(it - alphabet.begin());
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t c : node.children) {
      auto& g = groups.emplace_back();
      for (const auto& name : t.leaves_below(c)) g.push_back(index_of(name));
    }
    for (std::size_t a = 0; a < groups.size(); ++a) {
      for (std::size_t b = a + 1; b < groups.size(); ++b) {
        for (std::size_t i : groups[a]) {
          for (std::size_t j : groups[b]) values[pair_index(i, j)] = color;
        }
      }
    }
  }
  return SymbolicMap::from_indexed(std::move(elements), std::move(alphabet), std::move(values));
}

SymbolicMap evaluate_representation(const EventTree& t) {
  std::vector<std::string> labels;
  for (const auto& node : t.nodes()) {
    if (!node.is_leaf()) labels.push_back(node.label);
  }
  return evaluate_representation(t, std::move(labels));
}

SymbolicMap from_graph(const Graph& g) {
  if (g.order() < 2) throw InputError("from_graph needs at least two vertices");
  const std::size_t n = g.order();
  std::vector<std::uint16_t> values;
  values.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) values.push_back(g.adjacent(i, j) ? 1 : 0);
  }
  return SymbolicMap::from_indexed(g.vertices(), {"0", "1"}, std::move(values));
}

std::string to_json(const SymbolicMap& d) {
  std::string out = "{\"elements\":[";
  for (std::size_t i = 0; i < d.elements().size(); ++i) {
    if (i) out += ',';
    out += detail::quote(d.elements()[i]);
  }
  out += "], \"colors\":[";
  for (std::size_t i = 0; i < d.colors().size(); ++i) {
    if (i) out += ',';
    out += detail::quote(d.colors()[i]);
  }
  out += "], \"pairs\":[";
  bool first = true;
  for (std::size_t i = 0; i < d.element_count(); ++i) {
    for (std::size_t j = i + 1; j < d.element_count(); ++j) {
      if (!first) out += ", ";
      first = false;
      out += "{\"x\":" + detail::quote(d.elements()[i]) + ",\"y\":" + detail::quote(d.elements()[j]) +
             ",\"c\":" + detail::quote(d.color_name(i, j)) + "}";
    }
  }
  out += "]}\n";
  return out;
}

SymbolicMap parse_symbolic_map_json(std::string_view text) {
  const auto j = detail::parse_json(text, "symbolic map");
  const auto& je = detail::require(j, "elements", "symbolic map");
  const auto& jc = detail::require(j, "colors", "symbolic map");
  const auto& jp = detail::require(j, "pairs", "symbolic map");
  if (!je.is_array() || !jc.is_array() || !jp.is_array()) {
    throw InputError("symbolic map: elements, colors and pairs must be arrays");
  }
  std::vector<std::string> elements;
  for (const auto& e : je) elements.push_back(detail::require_string(e, "element"));
  std::vector<std::string> colors;
  for (const auto& c : jc) colors.push_back(detail::require_string(c, "color"));
  std::vector<PairColor> pairs;
  for (const auto& p : jp) {
    pairs.push_back({detail::require_string(detail::require(p, "x", "pair"), "pair x"),
                     detail::require_string(detail::require(p, "y", "pair"), "pair y"),
                     detail::require_string(detail::require(p, "c", "pair"), "pair c")});
  }
  return SymbolicMap(std::move(elements), std::move(colors), pairs);
}

}  // namespace symtree
