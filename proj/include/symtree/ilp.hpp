#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace symtree {

enum class Sense { le, ge, eq };

struct Term {
  std::size_t var;
  std::int64_t coef;

  friend bool operator==(const Term&, const Term&) = default;
};

struct LinearConstraint {
  std::vector<Term> terms;
  Sense sense;
  std::int64_t rhs;

  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

/// Minimization model over named binary variables with integer coefficients.
class IlpModel {
 public:
  /// Throws InputError on an empty or duplicate name.
  std::size_t add_variable(std::string name);
  /// Repeated variables are merged and zero coefficients dropped; throws
  /// InputError if nothing is left or a variable index is unknown.
  void add_constraint(std::vector<Term> terms, Sense sense, std::int64_t rhs);
  void set_objective(std::vector<Term> terms);
  /// Free-text line written at the top of the LP export.
  void add_comment(std::string line);

  std::size_t variable_count() const { return names_.size(); }
  std::size_t constraint_count() const { return constraints_.size(); }
  const std::vector<std::string>& variables() const { return names_; }
  const std::string& variable(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> find_variable(std::string_view name) const;
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  const std::vector<Term>& objective() const { return objective_; }
  const std::vector<std::string>& comments() const { return comments_; }

  /// Objective value of a full 0/1 assignment.
  std::int64_t evaluate(const std::vector<std::uint8_t>& assignment) const;
  bool satisfies(const std::vector<std::uint8_t>& assignment) const;

  friend bool operator==(const IlpModel&, const IlpModel&) = default;

 private:
  std::vector<Term> normalize(std::vector<Term> terms) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<LinearConstraint> constraints_;
  std::vector<Term> objective_;
  std::vector<std::string> comments_;
};

/// LP text with Minimize / Subject To / Binary / End sections; constraints
/// are named c1, c2, ... in insertion order and long lines are wrapped.
/// Throws InputError if a variable name is not a valid LP identifier.
std::string export_lp(const IlpModel& m);
/// Reads the subset of the LP format that export_lp writes. Throws InputError.
IlpModel parse_lp(std::string_view text);

enum class SolveStatus { optimal, infeasible, budget_exhausted };

std::string_view to_string(SolveStatus status);

struct SolveBudget {
  std::uint64_t max_nodes = 50'000'000;
  std::optional<std::chrono::milliseconds> time_limit;
};

struct SolveResult {
  SolveStatus status = SolveStatus::infeasible;
  /// Set when optimal, and when the budget ran out after an incumbent was found.
  std::optional<std::int64_t> objective;
  std::vector<std::uint8_t> assignment;
  std::uint64_t nodes = 0;
};

/// Depth-first branch and bound: variables in declaration order, 1 before 0,
/// pruning on constraint activity bounds and on the incumbent objective.
SolveResult solve_binary(const IlpModel& m, const SolveBudget& budget = {});

}  // namespace symtree
