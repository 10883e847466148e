#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symtree/decomposition.hpp"
#include "symtree/graph.hpp"

namespace symtree {

/// Monotone NAE 3-SAT instance. Variables are kept in input order; each
/// clause names three distinct declared variables.
struct NaeFormula {
  std::vector<std::string> variables;
  std::vector<std::vector<std::string>> clauses;

  /// Throws InputError for duplicate variables or malformed clauses.
  void validate() const;
};

using TruthAssignment = std::map<std::string, bool>;

/// {"variables":[...],"clauses":[[...],...]}
NaeFormula parse_formula_json(std::string_view text);
std::string to_json(const NaeFormula& f);

/// Triangle 0-1-2 with a square glued onto each triangle edge; vertices "0".."8".
Graph literal_graph();
/// literal_graph plus the pendant vertex 9 on 6 and leaves 10, 11 on 9.
Graph extended_literal_graph();
/// Triangle a, b, c joined to three extended literal graphs; literal j uses
/// vertex names "Gj_0".."Gj_8" and "9_j".
Graph clause_gadget();
/// One literal graph per variable ("L<var>_<0..8>"), one triangle per
/// clause ("C<i>_a/b/c") and connector vertices "N<i>_<j>". Throws InputError
/// on a malformed formula.
Graph nae3sat_graph(const NaeFormula& f);

inline constexpr std::size_t kNaeMaxVariables = 20;

/// Some assignment leaves every clause with a true and a false variable.
/// Exhaustive; the witness is the first one found counting up in binary.
/// Throws InputError above kNaeMaxVariables variables.
std::optional<TruthAssignment> nae_satisfiable(const NaeFormula& f);
bool nae_satisfies(const NaeFormula& f, const TruthAssignment& a);

/// K_k on "1".."k" plus the path k - a - b. Throws InputError for k < 2.
Graph clique_pendant(std::size_t k);

/// Partition of Q_{2n} into n classes; class i holds the edges flipping bit
/// 2i or 2i+1, a disjoint union of 4-cycles. Throws InputError for n == 0
/// or n > 10.
EdgeDecomposition hypercube_layer_partition(std::size_t n);

/// Reads a truth assignment off a cograph 2-decomposition of
/// nae3sat_graph(f): a variable is true when its literal triangle shares a
/// class with the triangle of the first variable's literal graph.
/// Throws InputError if some literal triangle is split across classes.
TruthAssignment decode_assignment(const NaeFormula& f, const EdgeDecomposition& d);

enum class ReductionVerdict { agree, disagree, unknown };

std::string_view to_string(ReductionVerdict v);

struct ReductionCheck {
  ReductionVerdict verdict = ReductionVerdict::unknown;
  bool satisfiable = false;
  std::optional<bool> decomposable;  // unset when the search ran out of budget
  std::optional<EdgeDecomposition> witness;
  std::uint64_t nodes = 0;
};

/// Compares NAE satisfiability with the existence of a cograph
/// 2-decomposition of nae3sat_graph(f).
ReductionCheck check_reduction(const NaeFormula& f, const SearchBudget& budget = {});

}  // namespace symtree
