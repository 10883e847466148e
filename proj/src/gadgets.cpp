#include "symtree/gadgets.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <utility>

#include "json_util.hpp"
#include "symtree/error.hpp"

namespace symtree {

namespace {

using NamedEdges = std::vector<std::pair<std::string, std::string>>;

constexpr std::pair<int, int> kLiteralEdges[] = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {1, 4},
                                                 {1, 5}, {5, 6}, {2, 6}, {2, 7}, {7, 8}, {0, 8}};

void add_literal(std::vector<std::string>& vertices, NamedEdges& edges, const std::string& prefix) {
  for (int i = 0; i <= 8; ++i) vertices.push_back(prefix + std::to_string(i));
  for (auto [a, b] : kLiteralEdges) edges.emplace_back(prefix + std::to_string(a), prefix + std::to_string(b));
}

// Attachment of connector j (1-based) to the clause triangle.
constexpr std::pair<char, char> kConnector[] = {{'a', 'c'}, {'a', 'b'}, {'b', 'c'}};

}  // namespace

void NaeFormula::validate() const {
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw InputError("formula: empty variable name");
    if (!seen.insert(v).second) throw InputError("formula: duplicate variable " + v);
  }
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const auto& c = clauses[i];
    const std::string where = "formula: clause " + std::to_string(i + 1);
    if (c.size() != 3) throw InputError(where + " must have exactly 3 variables");
    for (const auto& v : c) {
      if (!seen.contains(v)) throw InputError(where + " uses undeclared variable " + v);
    }
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) throw InputError(where + " repeats a variable");
  }
}

NaeFormula parse_formula_json(std::string_view text) {
  const auto j = detail::parse_json(text, "formula");
  NaeFormula f;
  const auto& vars = detail::require(j, "variables", "formula");
  const auto& clauses = detail::require(j, "clauses", "formula");
  if (!vars.is_array() || !clauses.is_array()) throw InputError("formula: variables and clauses must be arrays");
  for (const auto& v : vars) f.variables.push_back(detail::require_string(v, "formula variable"));
  for (const auto& c : clauses) {
    if (!c.is_array()) throw InputError("formula: each clause must be an array");
    auto& out = f.clauses.emplace_back();
    for (const auto& v : c) out.push_back(detail::require_string(v, "formula clause"));
  }
  f.validate();
  return f;
}

std::string to_json(const NaeFormula& f) {
  std::string out = "{\"variables\":[";
  for (std::size_t i = 0; i < f.variables.size(); ++i) out += (i ? "," : "") + detail::quote(f.variables[i]);
  out += "],\"clauses\":[";
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t k = 0; k < f.clauses[i].size(); ++k) out += (k ? "," : "") + detail::quote(f.clauses[i][k]);
    out += ']';
  }
  out += "]}\n";
  return out;
}

Graph literal_graph() {
  std::vector<std::string> vertices;
  NamedEdges edges;
  add_literal(vertices, edges, "");
  return Graph(std::move(vertices), edges);
}

Graph extended_literal_graph() {
  std::vector<std::string> vertices;
  NamedEdges edges;
  add_literal(vertices, edges, "");
  for (const char* v : {"9", "10", "11"}) vertices.emplace_back(v);
  edges.emplace_back("6", "9");
  edges.emplace_back("9", "10");
  edges.emplace_back("9", "11");
  return Graph(std::move(vertices), edges);
}

Graph clause_gadget() {
  std::vector<std::string> vertices{"a", "b", "c"};
  NamedEdges edges{{"a", "b"}, {"a", "c"}, {"b", "c"}};
  for (int j = 1; j <= 3; ++j) {
    const std::string prefix = "G" + std::to_string(j) + "_";
    const std::string nine = "9_" + std::to_string(j);
    add_literal(vertices, edges, prefix);
    vertices.push_back(nine);
    edges.emplace_back(prefix + "6", nine);
    const auto [p, q] = kConnector[j - 1];
    edges.emplace_back(nine, std::string(1, p));
    edges.emplace_back(nine, std::string(1, q));
  }
  return Graph(std::move(vertices), edges);
}

Graph nae3sat_graph(const NaeFormula& f) {
  f.validate();
  std::vector<std::string> vertices;
  NamedEdges edges;
  for (const auto& v : f.variables) add_literal(vertices, edges, "L" + v + "_");
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const std::string c = "C" + std::to_string(i + 1) + "_";
    for (const char* corner : {"a", "b", "c"}) vertices.push_back(c + corner);
    edges.emplace_back(c + "a", c + "b");
    edges.emplace_back(c + "a", c + "c");
    edges.emplace_back(c + "b", c + "c");
    for (int j = 1; j <= 3; ++j) {
      const std::string nine = "N" + std::to_string(i + 1) + "_" + std::to_string(j);
      vertices.push_back(nine);
      edges.emplace_back("L" + f.clauses[i][j - 1] + "_6", nine);
      const auto [p, q] = kConnector[j - 1];
      edges.emplace_back(nine, c + p);
      edges.emplace_back(nine, c + q);
    }
  }
  return Graph(std::move(vertices), edges);
}

bool nae_satisfies(const NaeFormula& f, const TruthAssignment& a) {
  for (const auto& c : f.clauses) {
    int trues = 0;
    for (const auto& v : c) {
      auto it = a.find(v);
      if (it == a.end()) throw InputError("assignment misses variable " + v);
      trues += it->second;
    }
    if (trues == 0 || trues == 3) return false;
  }
  return true;
}

std::optional<TruthAssignment> nae_satisfiable(const NaeFormula& f) {
  f.validate();
  const std::size_t n = f.variables.size();
  if (n > kNaeMaxVariables) throw InputError("NAE brute force is capped at 20 variables");
  std::vector<std::array<std::size_t, 3>> clauses;
  for (const auto& c : f.clauses) {
    std::array<std::size_t, 3> idx{};
    for (std::size_t k = 0; k < 3; ++k) {
      idx[k] = static_cast<std::size_t>(std::find(f.variables.begin(), f.variables.end(), c[k]) - f.variables.begin());
    }
    clauses.push_back(idx);
  }
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
    const bool ok = std::all_of(clauses.begin(), clauses.end(), [&](const auto& c) {
      const int trues = static_cast<int>((bits >> c[0] & 1) + (bits >> c[1] & 1) + (bits >> c[2] & 1));
      return trues == 1 || trues == 2;
    });
    if (ok) {
      TruthAssignment a;
      for (std::size_t i = 0; i < n; ++i) a[f.variables[i]] = (bits >> i & 1) != 0;
      return a;
    }
  }
  return std::nullopt;
}

Graph clique_pendant(std::size_t k) {
  if (k < 2) throw InputError("clique_pendant needs k >= 2");
  std::vector<std::string> vertices{"a", "b"};
  NamedEdges edges;
  for (std::size_t i = 1; i <= k; ++i) {
    vertices.push_back(std::to_string(i));
    for (std::size_t j = i + 1; j <= k; ++j) edges.emplace_back(std::to_string(i), std::to_string(j));
  }
  edges.emplace_back(std::to_string(k), "a");
  edges.emplace_back("a", "b");
  return Graph(std::move(vertices), edges);
}

EdgeDecomposition hypercube_layer_partition(std::size_t n) {
  if (n == 0 || n > 10) throw InputError("hypercube_layer_partition needs 1 <= n <= 10");
  Graph q = hypercube(2 * n);
  std::vector<std::vector<Edge>> classes(n);
  for (const Edge& e : q.edges()) {
    const auto& a = q.name(e.u);
    const auto& b = q.name(e.v);
    std::size_t pos = 0;
    while (a[pos] == b[pos]) ++pos;
    classes[pos / 2].push_back(e);
  }
  return EdgeDecomposition(std::move(q), std::move(classes), DecompositionKind::partition);
}

TruthAssignment decode_assignment(const NaeFormula& f, const EdgeDecomposition& d) {
  if (d.class_count() != 2) throw InputError("decoding needs a decomposition with exactly two classes");
  const Graph& g = d.base();
  auto class_of_triangle = [&](const std::string& var) {
    int found = -1;
    for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      const Edge e = make_edge(g.index_of("L" + var + "_" + std::to_string(a)), g.index_of("L" + var + "_" + std::to_string(b)));
      int here = -1;
      for (std::size_t i = 0; i < 2; ++i) {
        const auto& cls = d.classes()[i];
        if (std::binary_search(cls.begin(), cls.end(), e)) here = here < 0 ? static_cast<int>(i) : 2;
      }
      if (here == 2 || (found >= 0 && here != found)) throw InputError("literal triangle of " + var + " is split");
      found = here;
    }
    return found;
  };
  TruthAssignment out;
  if (f.variables.empty()) return out;
  const int reference = class_of_triangle(f.variables.front());
  for (const auto& v : f.variables) out[v] = class_of_triangle(v) == reference;
  return out;
}

std::string_view to_string(ReductionVerdict v) {
  switch (v) {
    case ReductionVerdict::agree:
      return "agree";
    case ReductionVerdict::disagree:
      return "disagree";
    case ReductionVerdict::unknown:
      break;
  }
  return "unknown";
}

ReductionCheck check_reduction(const NaeFormula& f, const SearchBudget& budget) {
  ReductionCheck out;
  out.satisfiable = nae_satisfiable(f).has_value();
  const auto r = exact_min_decomposition(nae3sat_graph(f), DecompositionKind::decomposition, 2, budget);
  out.nodes = r.nodes;
  if (r.status == SearchStatus::unknown) return out;
  out.decomposable = r.status == SearchStatus::optimal;
  out.witness = r.witness;
  out.verdict = *out.decomposable == out.satisfiable ? ReductionVerdict::agree : ReductionVerdict::disagree;
  return out;
}

}  // namespace symtree
