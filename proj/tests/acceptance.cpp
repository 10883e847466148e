// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "symtree/cograph.hpp"
#include "symtree/decomposition.hpp"
#include "symtree/error.hpp"
#include "symtree/gadgets.hpp"
#include "symtree/ilp.hpp"
#include "symtree/models.hpp"
#include "symtree/oracles.hpp"
#include "symtree/symbolic_map.hpp"
#include "symtree/tree_repr.hpp"

using namespace symtree;
using namespace symtree::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    failures_ += !ok;
  }
  Outcome done(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + ", " + std::to_string(checks_) + " checks"};
    return {false, std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed; first: " + first_failure_};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

// Every symbolic map on |X| = 4 with 2 or 3 colors, plus random maps and
// random ultrametrics on 5..7 elements.
std::vector<SymbolicMap> map_sweep() {
  std::vector<SymbolicMap> out;
  for (std::size_t m : {2u, 3u}) {
    std::size_t total = 1;
    for (int p = 0; p < 6; ++p) total *= m;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::uint16_t> values(6);
      for (std::size_t p = 0, c = code; p < 6; ++p, c /= m) values[p] = static_cast<std::uint16_t>(c % m);
      out.push_back(SymbolicMap::from_indexed(vnames(4), color_names(m), std::move(values)));
    }
  }
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> size(5, 7), colors(2, 3);
  for (int i = 0; i < 10000; ++i) out.push_back(random_map(rng, size(rng), colors(rng)));
  for (int i = 0; i < 3000; ++i) out.push_back(random_ultrametric(rng, size(rng), colors(rng)));
  return out;
}

Outcome characterization_equivalence() {
  Tally t;
  std::size_t positive = 0;
  const auto maps = map_sweep();
  for (const auto& d : maps) {
    const bool axioms = check_axioms(d).ok;
    positive += axioms;
    t.check(axioms == check_characterization(d).ok, to_json(d));
  }
  return t.done(std::to_string(maps.size()) + " maps, " + std::to_string(positive) + " ultrametric");
}

Outcome representation_round_trip() {
  Tally t;
  const auto maps = map_sweep();
  for (const auto& d : maps) {
    const bool axioms = check_axioms(d).ok;
    std::optional<EventTree> tree;
    try {
      tree = build_representation(d);
    } catch (const NotUltrametricError&) {
    }
    t.check(tree.has_value() == axioms, "representation existence: " + to_json(d));
    if (tree) t.check(evaluate_representation(*tree, d.colors()) == d, "round trip: " + to_json(d));
  }
  return t.done(std::to_string(maps.size()) + " maps");
}

void cograph_triple(Tally& t, const Graph& g) {
  const bool axioms = check_axioms(from_graph(g)).ok;
  const bool recognized = recognize_cograph(g).is_cograph();
  const bool p4_free = list_induced_p4s(g).empty();
  t.check(axioms == recognized && recognized == p4_free, to_json(g));
}

Outcome cograph_ultrametric_equivalence() {
  Tally t;
  std::size_t graphs = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask, ++graphs) {
      cograph_triple(t, graph_from_mask(n, mask));
    }
  }
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int i = 0; i < 5000; ++i, ++graphs) cograph_triple(t, random_graph(rng, 7, density(rng)));
  for (int i = 0; i < 1000; ++i, ++graphs) cograph_triple(t, random_cograph(rng, 7));
  return t.done(std::to_string(graphs) + " graphs (all labeled graphs n <= 6, random n = 7)");
}

Outcome cotree_pipeline() {
  Tally t;
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> size(2, 10);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = random_cograph(rng, size(rng));
    const auto rec = recognize_cograph(g);
    t.check(rec.is_cograph(), "generator produced a non-cograph: " + to_json(g));
    if (!rec.is_cograph()) continue;
    const Cotree via_tree = to_cotree(build_representation(from_graph(g)), g);
    t.check(canonical_form(via_tree.tree()) == canonical_form(rec.cotree->tree()), to_json(g));
  }
  return t.done("1000 random cographs, 2 <= n <= 10");
}

void coloring_checks(Tally& t, const Graph& g) {
  const auto coloring = proper_edge_coloring(g);
  t.check(is_proper_edge_coloring(g, coloring), "improper coloring: " + to_json(g));
  const auto d = coloring_to_partition(g, coloring);
  t.check(validate(d).ok, "partition does not validate: " + to_json(g));
  t.check(d.class_count() <= max_degree(g) + 1, "more than max degree + 1 classes: " + to_json(g));
  for (std::size_t i = 0; i < d.class_count(); ++i) {
    t.check(max_degree(d.class_graph(i)) <= 1, "class is not a matching: " + to_json(g));
  }
}

Outcome coloring_bound() {
  Tally t;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> size(1, 30);
  std::uniform_real_distribution<double> density(0.05, 0.95);
  for (int i = 0; i < 1000; ++i) coloring_checks(t, random_graph(rng, size(rng), density(rng)));
  coloring_checks(t, hypercube(4));
  coloring_checks(t, hypercube(6));
  return t.done("1000 random graphs n <= 30, Q4, Q6");
}

std::set<std::pair<std::string, std::string>> edge_names(const Graph& g, const std::vector<Edge>& edges) {
  std::set<std::pair<std::string, std::string>> out;
  for (const Edge& e : edges) out.emplace(g.name(e.u), g.name(e.v));
  return out;
}

Outcome literal_graph_uniqueness() {
  Tally t;
  const Graph g = literal_graph();
  const std::size_t m = g.size();
  // Each edge goes to class 1, class 2 or both: 3^12 assignments.
  std::set<std::pair<std::uint32_t, std::uint32_t>> valid;
  std::size_t total = 1;
  for (std::size_t e = 0; e < m; ++e) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::vector<Edge>> classes(2);
    std::uint32_t m1 = 0, m2 = 0;
    for (std::size_t e = 0, c = code; e < m; ++e, c /= 3) {
      if (c % 3 != 1) {
        classes[0].push_back(g.edges()[e]);
        m1 |= 1u << e;
      }
      if (c % 3 != 0) {
        classes[1].push_back(g.edges()[e]);
        m2 |= 1u << e;
      }
    }
    if (!m1 || !m2) continue;
    if (is_cograph(Graph::from_indexed(g.vertices(), classes[0])) &&
        is_cograph(Graph::from_indexed(g.vertices(), classes[1]))) {
      valid.emplace(std::min(m1, m2), std::max(m1, m2));
    }
  }
  t.check(valid.size() == 1, "literal graph has " + std::to_string(valid.size()) + " valid 2-decompositions");
  if (valid.size() == 1) {
    const auto [a, b] = *valid.begin();
    t.check((a & b) == 0, "the valid 2-decomposition is not a partition");
    std::vector<Edge> ca, cb;
    for (std::size_t e = 0; e < m; ++e) {
      if (a >> e & 1) ca.push_back(g.edges()[e]);
      if (b >> e & 1) cb.push_back(g.edges()[e]);
    }
    const std::set<std::pair<std::string, std::string>> triangle_side{{"0", "1"}, {"0", "2"}, {"1", "2"},
                                                                      {"3", "4"}, {"5", "6"}, {"7", "8"}};
    const std::set<std::pair<std::string, std::string>> spokes{{"0", "3"}, {"1", "4"}, {"1", "5"},
                                                               {"2", "6"}, {"2", "7"}, {"0", "8"}};
    const auto na = edge_names(g, ca), nb = edge_names(g, cb);
    t.check((na == triangle_side && nb == spokes) || (na == spokes && nb == triangle_side),
            "the unique 2-partition differs from triangle + opposite square edges vs spokes");
  }

  const Graph x = extended_literal_graph();
  std::vector<EdgeDecomposition> parts;
  const auto r = enumerate_decompositions(x, DecompositionKind::partition, 2, [&](const EdgeDecomposition& d) {
    parts.push_back(d);
    return true;
  });
  t.check(r.complete, "extended literal graph enumeration ran out of budget");
  t.check(parts.size() == 1, "extended literal graph has " + std::to_string(parts.size()) + " 2-partitions");
  if (parts.size() == 1) {
    auto class_of = [&](const std::string& a, const std::string& b) {
      const Edge e = make_edge(x.index_of(a), x.index_of(b));
      for (std::size_t i = 0; i < 2; ++i) {
        const auto& c = parts[0].classes()[i];
        if (std::binary_search(c.begin(), c.end(), e)) return static_cast<int>(i);
      }
      return -1;
    };
    const int triangle = class_of("0", "1");
    t.check(class_of("6", "9") == triangle, "[6,9] is not with the triangle");
    t.check(class_of("9", "10") == 1 - triangle, "[9,10] is with the triangle");
    t.check(class_of("9", "11") == 1 - triangle, "[9,11] is with the triangle");
  }
  return t.done(std::to_string(total) + " assignments on the literal graph, " + std::to_string(r.nodes) +
                " search nodes on the extended one");
}

Outcome editing_correspondence() {
  Tally t;
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  std::size_t oracle_checks = 0;
  for (int i = 0; i < 500; ++i) {
    const Graph g = random_graph(rng, size(rng), density(rng));
    const SymbolicMap d = from_graph(g);
    for (EditVariant v : {EditVariant::edit, EditVariant::complete, EditVariant::remove}) {
      const std::string where = std::string(to_string(v)) + " " + to_json(g);
      const IlpModel model = build_ultrametric_model(d, v);
      const auto solved = solve_binary(model);
      t.check(solved.status == SolveStatus::optimal, "solver did not finish: " + where);
      if (solved.status != SolveStatus::optimal) continue;
      const auto brute = brute_force_cograph_edit(g, v);
      t.check(ordered_pair_count(*solved.objective) == 2 * static_cast<std::int64_t>(brute.changes), "optimum: " + where);
      t.check(check_axioms(decode_ultrametric(d, model, solved.assignment)).ok, "decoded map: " + where);
      if (g.order() <= kUltrametricOracleMaxElements) {
        ++oracle_checks;
        const auto um = brute_force_ultrametric_edit(d, v);
        t.check(um.ordered_pairs == 2 * brute.changes, "ultrametric oracle: " + where);
      }
    }
  }
  return t.done("500 graphs x 3 variants, " + std::to_string(oracle_checks) + " ultrametric oracle comparisons");
}

// Graphs on n vertices up to isomorphism, by adding a vertex to each graph on
// n - 1 vertices in every way and keeping one representative per canonical
// form. The canonical form is the least adjacency bitmask over the vertex
// orders that sort vertices by degree.
using Mask = std::uint32_t;

std::size_t pair_bit(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

Mask canonical(Mask g, std::size_t n) {
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g >> pair_bit(i, j, n) & 1) ++degree[i], ++degree[j];
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degree[a] < degree[b]; });
  // Permute within blocks of equal degree only.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t s = 0; s < n;) {
    std::size_t e = s;
    while (e < n && degree[order[e]] == degree[order[s]]) ++e;
    blocks.emplace_back(s, e);
    s = e;
  }
  Mask best = ~Mask{0};
  auto visit = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      Mask m = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (g >> pair_bit(order[i], order[j], n) & 1) m |= Mask{1} << pair_bit(i, j, n);
      best = std::min(best, m);
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
    std::sort(first, last);
    do self(self, b + 1);
    while (std::next_permutation(first, last));
  };
  visit(visit, 0);
  return best;
}

std::vector<Graph> unlabeled_graphs_up_to(std::size_t max_n) {
  std::vector<Graph> out;
  std::set<Mask> level{0};
  out.push_back(graph_from_mask(1, 0));
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::set<Mask> next;
    for (Mask g : level) {
      Mask lifted = 0;
      for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j + 1 < n; ++j)
          if (g >> pair_bit(i, j, n - 1) & 1) lifted |= Mask{1} << pair_bit(i, j, n);
      for (Mask nb = 0; nb < (Mask{1} << (n - 1)); ++nb) {
        Mask h = lifted;
        for (std::size_t i = 0; i + 1 < n; ++i)
          if (nb >> i & 1) h |= Mask{1} << pair_bit(i, n - 1, n);
        next.insert(canonical(h, n));
      }
    }
    for (Mask g : next) out.push_back(graph_from_mask(n, g));
    level = std::move(next);
  }
  return out;
}

Outcome solver_search_agreement() {
  Tally t;
  const auto graphs = unlabeled_graphs_up_to(7);
  t.check(graphs.size() == 1252, "expected 1252 graphs on at most 7 vertices, got " + std::to_string(graphs.size()));
  std::uint64_t ilp_nodes = 0, search_nodes = 0;
  for (const Graph& g : graphs) {
    for (DecompositionKind kind : {DecompositionKind::partition, DecompositionKind::decomposition}) {
      const std::string where = std::string(to_string(kind)) + " " + to_json(g);
      const auto search = exact_min_decomposition(g, kind, 3);
      search_nodes += search.nodes;
      t.check(search.status == SearchStatus::optimal, "search did not reach an optimum: " + where);
      const IlpModel model = build_decomposition_model(g, kind, 3);
      const auto solved = solve_binary(model);
      ilp_nodes += solved.nodes;
      t.check(solved.status == SolveStatus::optimal, "solver did not reach an optimum: " + where);
      if (search.status != SearchStatus::optimal || solved.status != SolveStatus::optimal) continue;
      t.check(*solved.objective == static_cast<std::int64_t>(search.k), "optimum differs: " + where);
      if (search.k > 0) t.check(validate(*search.witness).ok, "search witness: " + where);
      const auto decoded = decode_decomposition(g, kind, 3, model, solved.assignment);
      t.check(decoded.class_count() == search.k, "decoded class count: " + where);
      t.check(validate(decoded).ok, "decoded witness: " + where);
    }
  }
  return t.done(std::to_string(graphs.size()) + " graphs x 2 kinds, " + std::to_string(ilp_nodes) + " solver nodes, " +
                std::to_string(search_nodes) + " search nodes");
}

Outcome small_examples() {
  Tally t;
  for (std::size_t k = 4; k <= 7; ++k) {
    const Graph g = clique_pendant(k);
    for (DecompositionKind kind : {DecompositionKind::partition, DecompositionKind::decomposition}) {
      const auto r = exact_min_decomposition(g, kind, 3);
      t.check(r.status == SearchStatus::optimal && r.k == 2,
              "clique_pendant(" + std::to_string(k) + ") " + std::string(to_string(kind)) + " optimum is not 2");
    }
  }
  const auto layers = hypercube_layer_partition(2);
  t.check(layers.base() == hypercube(4), "layer partition base is not Q4");
  t.check(validate(layers).ok, "layer partition does not validate");
  const auto c = coarsen(layers);
  t.check(c.decomposition == layers, "coarsen changed the layer partition");
  t.check(!is_cograph(layers.base()), "Q4 is a cograph");
  std::vector<Edge> merged = layers.classes()[0];
  merged.insert(merged.end(), layers.classes()[1].begin(), layers.classes()[1].end());
  t.check(!list_induced_p4s(Graph::from_indexed(layers.base().vertices(), merged)).empty(),
          "merged layer classes contain no induced P4");
  return t.done("clique_pendant k = 4..7, Q4 layers");
}

Outcome reduction_spot_check() {
  Tally t;
  std::ostringstream note;
  const NaeFormula clause{{"x", "y", "z"}, {{"x", "y", "z"}}};
  SearchBudget minute{~std::uint64_t{0}, std::chrono::milliseconds(60'000)};
  const auto single = check_reduction(clause, minute);
  t.check(single.verdict == ReductionVerdict::agree, "single clause verdict is " + std::string(to_string(single.verdict)));
  if (single.witness) t.check(nae_satisfies(clause, decode_assignment(clause, *single.witness)), "single clause decoding");
  note << "single clause: " << to_string(single.verdict) << " after " << single.nodes << " nodes";

  const NaeFormula fig{{"x1", "x2", "x3", "x4", "x5", "x6"}, {{"x1", "x4", "x2"}, {"x2", "x3", "x4"}, {"x4", "x5", "x6"}}};
  SearchBudget ten_minutes{~std::uint64_t{0}, std::chrono::milliseconds(600'000)};
  const auto three = check_reduction(fig, ten_minutes);
  t.check(three.satisfiable, "three clause formula is not NAE-satisfiable");
  t.check(three.verdict != ReductionVerdict::disagree, "three clause formula disagrees");
  if (three.witness) {
    t.check(validate(*three.witness).ok, "three clause witness does not validate");
    t.check(nae_satisfies(fig, decode_assignment(fig, *three.witness)), "three clause decoding");
  }
  note << "; three clauses: " << to_string(three.verdict) << " after " << three.nodes << " nodes";
  return t.done(note.str());
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string quoted(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

struct Capture {
  int status = 0;
  std::string out, err, file;
};

Capture invoke(const std::vector<std::string>& args, const fs::path& dir, const std::string& artifact) {
  std::string cmd = quoted(SYMTREE_CLI);
  for (const auto& a : args) cmd += " " + quoted(a);
  const fs::path out = dir / "stdout", err = dir / "stderr";
  cmd += " >" + quoted(out.string()) + " 2>" + quoted(err.string());
  Capture c;
  c.status = std::system(cmd.c_str());
  c.out = slurp(out);
  c.err = slurp(err);
  if (!artifact.empty()) {
    c.file = slurp(dir / artifact);
    fs::remove(dir / artifact);
  }
  return c;
}

Outcome cli_determinism() {
  Tally t;
  const fs::path dir = fs::temp_directory_path() / "symtree_acceptance";
  fs::create_directories(dir);
  const std::string fx = SYMTREE_FIXTURES;
  auto f = [&](const std::string& name) { return fx + "/" + name; };
  auto o = [&](const std::string& name) { return (dir / name).string(); };
  struct Case {
    std::vector<std::string> args;
    std::string artifact;
  };
  const std::vector<Case> cases{
      {{"check-cograph", f("p4.json")}, ""},
      {{"check-cograph", f("cograph.json")}, ""},
      {{"cotree", f("cograph.json"), "-o", o("t.nwk")}, "t.nwk"},
      {{"cotree", f("cograph.json"), "--dot"}, ""},
      {{"check-um", f("p4map.json")}, ""},
      {{"check-um", f("um3.json")}, ""},
      {{"represent", f("um3.json"), "-o", o("r.nwk")}, "r.nwk"},
      {{"to-cotree", f("tree.nwk"), f("cherry.json")}, ""},
      {{"decompose", f("literal.json"), "--kind", "partition", "--method", "exact", "-o", o("d.json")}, "d.json"},
      {{"decompose", f("c5.json"), "--kind", "decomposition", "--method", "exact", "--dot", o("d.dot")}, "d.dot"},
      {{"decompose", f("extended_literal.json"), "--method", "coloring", "-o", o("c.json")}, "c.json"},
      {{"decompose", f("literal.json"), "--method", "export-lp", "--k-max", "2", "-o", o("m.lp")}, "m.lp"},
      {{"repair", f("p4map.json"), "--variant", "edit", "--method", "exact", "-o", o("u.json")}, "u.json"},
      {{"repair", f("p4map.json"), "--variant", "delete", "--method", "export-lp", "-o", o("u.lp")}, "u.lp"},
      {{"repair", f("p4map.json"), "--variant", "edit", "--method", "exact", "--budget", "1"}, ""},
      {{"gen", "clause", "-o", o("g.json")}, "g.json"},
      {{"gen", "hypercube-layers", "2"}, ""},
      {{"reduce", f("clause.json"), "--check"}, ""},
      {{"reduce", f("fig8.json"), "-o", o("f.json")}, "f.json"},
      {{"check-cograph", f("missing.json")}, ""},
  };
  for (const auto& c : cases) {
    std::string label;
    for (const auto& a : c.args) label += a + " ";
    const Capture first = invoke(c.args, dir, c.artifact);
    t.check(c.artifact.empty() || !first.file.empty(), "no artifact written: " + label);
    for (int run = 1; run < 3; ++run) {
      const Capture again = invoke(c.args, dir, c.artifact);
      t.check(again.status == first.status && again.out == first.out && again.err == first.err && again.file == first.file,
              "output differs between runs: " + label);
    }
  }
  return t.done(std::to_string(cases.size()) + " invocations x 3 runs");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"characterization-equivalence", characterization_equivalence},
      {"representation-round-trip", representation_round_trip},
      {"cograph-ultrametric-equivalence", cograph_ultrametric_equivalence},
      {"cotree-pipeline", cotree_pipeline},
      {"coloring-bound", coloring_bound},
      {"literal-graph-uniqueness", literal_graph_uniqueness},
      {"editing-correspondence", editing_correspondence},
      {"solver-search-agreement", solver_search_agreement},
      {"small-examples", small_examples},
      {"reduction-spot-check", reduction_spot_check},
      {"cli-determinism", cli_determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !r.pass;
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", secs);
    std::cout << (r.pass ? "PASS " : "FAIL ") << name << " (" << time << "): " << r.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
