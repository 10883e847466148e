#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "symtree/decomposition.hpp"
#include "symtree/graph.hpp"
#include "symtree/ilp.hpp"
#include "symtree/symbolic_map.hpp"

namespace symtree {

enum class EditVariant { edit, complete, remove };

/// "edit", "complete", "delete".
std::string_view to_string(EditVariant v);
EditVariant parse_edit_variant(std::string_view text);

/// The reserved color that completion and deletion treat as "no relation".
inline constexpr std::string_view kNullColor = "0";

/// E_<color>_<x>_<y> for the edit models, E_<class>_<x>_<y> with 1-based
/// class numbers for the decomposition model; x < y.
std::string pair_variable_name(std::string_view tag, std::string_view x, std::string_view y);

/// Closest symbolic ultrametric over the same colors. One variable per
/// unordered pair and color; the objective counts changed unordered pairs.
/// Throws InputError if the variant needs color "0" and the map lacks it.
IlpModel build_ultrametric_model(const SymbolicMap& d, EditVariant variant);

/// Reads the chosen color of every pair from a feasible assignment.
SymbolicMap decode_ultrametric(const SymbolicMap& d, const IlpModel& m, const std::vector<std::uint8_t>& assignment);

/// Pair-level optimum to the ordered-pair count |D|.
inline std::int64_t ordered_pair_count(std::int64_t pair_changes) { return 2 * pair_changes; }

/// Cograph k-decomposition / k-partition with at most k_max classes,
/// minimizing the number of used classes. Only edges get variables.
/// Throws InputError for k_max == 0.
IlpModel build_decomposition_model(const Graph& g, DecompositionKind kind, std::size_t k_max);

/// Nonempty classes of a feasible assignment; empty ones are dropped.
EdgeDecomposition decode_decomposition(const Graph& g, DecompositionKind kind, std::size_t k_max, const IlpModel& m,
                                       const std::vector<std::uint8_t>& assignment);

}  // namespace symtree
