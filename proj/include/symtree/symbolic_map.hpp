#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symtree/graph.hpp"
#include "symtree/labeled_tree.hpp"

namespace symtree {

/// One entry of a symbolic map given by names.
struct PairColor {
  std::string x;
  std::string y;
  std::string color;
};

/// Total symmetric map from unordered pairs of distinct elements to colors.
///
/// The diagonal is implicit and never stored, symmetry is structural, and
/// every pair has exactly one color. Elements and colors are kept sorted;
/// pair (i, j), i < j, is stored at pair_index(i, j).
class SymbolicMap {
 public:
  /// Validates totality, symmetry-free input (each unordered pair exactly
  /// once), known colors and the reserved color name. Throws InputError.
  SymbolicMap(std::vector<std::string> elements, std::vector<std::string> colors,
              std::span<const PairColor> pairs);

  /// `values[pair_index(i, j)]` is the color index of pair (i, j).
  static SymbolicMap from_indexed(std::vector<std::string> sorted_elements,
                                  std::vector<std::string> sorted_colors, std::vector<std::uint16_t> values);

  std::size_t element_count() const { return elements_.size(); }
  std::size_t pair_count() const { return values_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<std::string>& colors() const { return colors_; }
  const std::vector<std::uint16_t>& values() const { return values_; }

  std::size_t pair_index(std::size_t i, std::size_t j) const;
  std::uint16_t color_of(std::size_t i, std::size_t j) const { return values_[pair_index(i, j)]; }
  const std::string& color_name(std::size_t i, std::size_t j) const { return colors_[color_of(i, j)]; }
  /// By names; throws InputError for unknown or equal elements.
  const std::string& at(std::string_view x, std::string_view y) const;

  std::optional<std::size_t> find_element(std::string_view name) const;
  std::optional<std::uint16_t> find_color(std::string_view name) const;

  friend bool operator==(const SymbolicMap&, const SymbolicMap&) = default;

 private:
  SymbolicMap() = default;
  void validate_colors() const;

  std::vector<std::string> elements_;
  std::vector<std::string> colors_;
  std::vector<std::uint16_t> values_;
};

/// Outcome of an ultrametric check. `rule` names the failed condition
/// ("U2", "U3", "U2'", "U3'"); `subset` lists the witness elements, in role
/// order x, y, u, v for U3 and as the induced path for U3'.
struct UltrametricVerdict {
  bool ok = true;
  std::string rule;
  std::vector<std::string> subset;
  std::string color;

  std::string describe() const;
};

/// Direct axiom check: no triangle with three colors, and no 4-subset in
/// which some role assignment gives d(x,y)=d(y,u)=d(u,v) != d(y,v)=d(x,v)=d(x,u).
UltrametricVerdict check_axioms(const SymbolicMap& d);

/// Graph on the elements whose edges are the pairs colored `color`.
Graph mono_subgraph(const SymbolicMap& d, std::string_view color);

/// Triangle condition plus: every monochromatic subgraph is a cograph.
UltrametricVerdict check_characterization(const SymbolicMap& d);

using EventTree = LabeledTree;

/// Discriminating symbolic representation. Throws NotUltrametricError when
/// some element set has no color whose removal disconnects it.
EventTree build_representation(const SymbolicMap& d);

/// Map read off the tree (lca labels); the alphabet is the set of labels used.
SymbolicMap evaluate_representation(const EventTree& t);
/// Same, over a given alphabet that must contain every label of `t`.
SymbolicMap evaluate_representation(const EventTree& t, std::vector<std::string> alphabet);

/// Colors edges "1" and non-edges "0". Needs at least two vertices.
SymbolicMap from_graph(const Graph& g);

/// {"elements":[...], "colors":[...], "pairs":[{"x":..,"y":..,"c":..}, ...]} plus newline.
std::string to_json(const SymbolicMap& d);
SymbolicMap parse_symbolic_map_json(std::string_view text);

}  // namespace symtree
