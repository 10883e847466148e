#pragma once

#include <cstddef>

#include "symtree/graph.hpp"
#include "symtree/models.hpp"
#include "symtree/symbolic_map.hpp"

namespace symtree {

inline constexpr std::size_t kCographOracleMaxOrder = 7;
inline constexpr std::size_t kUltrametricOracleMaxElements = 5;
inline constexpr std::size_t kUltrametricOracleMaxColors = 3;

struct CographEditResult {
  std::size_t changes = 0;  // number of edited vertex pairs
  Graph witness;
};

/// Fewest pair flips (edit), added edges (complete) or removed edges
/// (delete) that make `g` a cograph, by trying all change sets of size
/// 0, 1, 2, ... Throws InputError above kCographOracleMaxOrder vertices.
CographEditResult brute_force_cograph_edit(const Graph& g, EditVariant variant);

struct UltrametricEditResult {
  std::size_t changed_pairs = 0;
  std::size_t ordered_pairs = 0;  // 2 * changed_pairs
  SymbolicMap witness;
};

/// Closest symbolic ultrametric by enumerating every admissible map.
/// Throws InputError above the element or color caps, or when a variant
/// needs color "0" and the map lacks it.
UltrametricEditResult brute_force_ultrametric_edit(const SymbolicMap& d, EditVariant variant);

}  // namespace symtree
