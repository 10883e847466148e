#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "symtree/cograph.hpp"
#include "symtree/decomposition.hpp"
#include "symtree/error.hpp"
#include "symtree/gadgets.hpp"
#include "symtree/graph.hpp"
#include "symtree/ilp.hpp"
#include "symtree/labeled_tree.hpp"
#include "symtree/models.hpp"
#include "symtree/symbolic_map.hpp"
#include "symtree/tree_repr.hpp"

namespace symtree::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out.flush()) throw InputError("cannot write " + path);
}

std::string join_path(const P4& p) { return p[0] + "-" + p[1] + "-" + p[2] + "-" + p[3]; }

std::string class_line(const EdgeDecomposition& d, std::size_t i) {
  std::string line;
  for (const Edge& e : d.classes()[i]) {
    if (!line.empty()) line += ' ';
    line += d.base().name(e.u) + "-" + d.base().name(e.v);
  }
  return line;
}

void print_classes(std::ostream& out, const EdgeDecomposition& d) {
  out << "classes: " << d.class_count() << "\n";
  for (std::size_t i = 0; i < d.class_count(); ++i) out << "class " << i + 1 << ": " << class_line(d, i) << "\n";
}

struct Options {
  std::string input;
  std::string second;
  std::string output;
  std::string dot_path;
  bool dot = false;
  bool check = false;
  std::string kind = "partition";
  std::string method;
  std::string variant;
  std::optional<std::size_t> k_max;
  std::optional<std::uint64_t> budget;
  std::string gadget;
  std::optional<std::size_t> size;
};

int check_cograph(const Options& o, std::ostream& out) {
  const Graph g = parse_graph_json(read_file(o.input));
  if (g.empty()) {
    out << "cograph: yes\n";
    return kOk;
  }
  const auto r = recognize_cograph(g);
  if (r.is_cograph()) {
    out << "cograph: yes\n";
    return kOk;
  }
  out << "cograph: no\nwitness: " << join_path(*r.witness) << "\n";
  return kFalse;
}

int cotree(const Options& o, std::ostream& out) {
  const Graph g = parse_graph_json(read_file(o.input));
  if (g.empty()) throw InputError("the empty graph has no cotree");
  const auto r = recognize_cograph(g);
  if (!r.is_cograph()) {
    out << "cograph: no\nwitness: " << join_path(*r.witness) << "\n";
    return kFalse;
  }
  const std::string newick = to_newick(r.cotree->tree());
  if (!o.output.empty()) write_file(o.output, newick + "\n");
  if (o.dot) {
    out << tree_to_dot(r.cotree->tree());
  } else {
    out << "cograph: yes\ncotree: " << newick << "\n";
  }
  return kOk;
}

int check_um(const Options& o, std::ostream& out) {
  const SymbolicMap d = parse_symbolic_map_json(read_file(o.input));
  const auto axioms = check_axioms(d);
  const auto chars = check_characterization(d);
  if (axioms.ok != chars.ok) throw InvariantError("axiom check and characterization disagree");
  out << "ultrametric: " << (axioms.ok ? "yes" : "no") << "\n";
  out << "axioms: " << axioms.describe() << "\n";
  out << "characterization: " << chars.describe() << "\n";
  return axioms.ok ? kOk : kFalse;
}

int represent(const Options& o, std::ostream& out) {
  const SymbolicMap d = parse_symbolic_map_json(read_file(o.input));
  try {
    const EventTree t = build_representation(d);
    const std::string newick = to_newick(t);
    if (!o.output.empty()) write_file(o.output, newick + "\n");
    out << "ultrametric: yes\ntree: " << newick << "\n";
    return kOk;
  } catch (const NotUltrametricError&) {
    out << "ultrametric: no\naxioms: " << check_axioms(d).describe() << "\n";
    return kFalse;
  }
}

int to_cotree_cmd(const Options& o, std::ostream& out) {
  const EventTree t = parse_newick(read_file(o.input));
  const Graph g = parse_graph_json(read_file(o.second));
  try {
    const Cotree c = to_cotree(t, g);
    const std::string newick = to_newick(c.tree());
    if (!o.output.empty()) write_file(o.output, newick + "\n");
    out << "represents: yes\ncotree: " << newick << "\n";
    return kOk;
  } catch (const RepresentationError& e) {
    out << "represents: no\nreason: " << e.what() << "\n";
    return kFalse;
  }
}

SearchBudget search_budget(const Options& o) {
  SearchBudget b;
  if (o.budget) b.max_nodes = *o.budget;
  return b;
}

void emit_decomposition(const Options& o, const EdgeDecomposition& d, std::ostream& out) {
  print_classes(out, d);
  if (!o.output.empty()) write_file(o.output, to_json(d));
  if (!o.dot_path.empty()) write_file(o.dot_path, to_dot(d));
}

int decompose(const Options& o, std::ostream& out) {
  const Graph g = parse_graph_json(read_file(o.input));
  const DecompositionKind kind = parse_decomposition_kind(o.kind);
  const std::size_t k_max = o.k_max.value_or(max_degree(g) + 1);
  if (o.k_max && *o.k_max == 0) throw InputError("--k-max must be at least 1");
  out << "method: " << o.method << "\nkind: " << to_string(kind) << "\n";
  if (o.method == "coloring") {
    const EdgeDecomposition p = coloring_to_partition(g, proper_edge_coloring(g));
    const EdgeDecomposition d(g, p.classes(), kind);
    out << "max-degree: " << max_degree(g) << "\n";
    emit_decomposition(o, d, out);
    return kOk;
  }
  if (o.method == "exact") {
    if (k_max > 20) throw InputError("exact search supports at most 20 classes; pass a smaller --k-max");
    const auto r = exact_min_decomposition(g, kind, k_max, search_budget(o));
    out << "k-max: " << k_max << "\nstatus: " << to_string(r.status) << "\nnodes: " << r.nodes << "\n";
    if (r.status == SearchStatus::unknown) return kBudget;
    if (r.status == SearchStatus::infeasible) return kFalse;
    out << "k: " << r.k << "\n";
    emit_decomposition(o, *r.witness, out);
    return kOk;
  }
  if (o.method == "export-lp") {
    if (o.output.empty()) throw InputError("export-lp needs -o <file.lp>");
    const IlpModel m = build_decomposition_model(g, kind, k_max);
    write_file(o.output, export_lp(m));
    out << "k-max: " << k_max << "\nvariables: " << m.variable_count() << "\nconstraints: " << m.constraint_count()
        << "\n";
    return kOk;
  }
  throw InputError("unknown method: " + o.method);
}

int repair(const Options& o, std::ostream& out) {
  const SymbolicMap d = parse_symbolic_map_json(read_file(o.input));
  const EditVariant variant = parse_edit_variant(o.variant);
  const IlpModel m = build_ultrametric_model(d, variant);
  out << "method: " << o.method << "\nvariant: " << to_string(variant) << "\n";
  if (o.method == "export-lp") {
    if (o.output.empty()) throw InputError("export-lp needs -o <file.lp>");
    write_file(o.output, export_lp(m));
    out << "variables: " << m.variable_count() << "\nconstraints: " << m.constraint_count() << "\n";
    return kOk;
  }
  if (o.method != "exact") throw InputError("unknown method: " + o.method);
  SolveBudget b;
  if (o.budget) b.max_nodes = *o.budget;
  const SolveResult r = solve_binary(m, b);
  out << "status: " << to_string(r.status) << "\nnodes: " << r.nodes << "\n";
  if (r.status == SolveStatus::infeasible) return kFalse;
  if (r.objective) {
    const std::string label = r.status == SolveStatus::optimal ? "" : "incumbent-";
    out << label << "changed-pairs: " << *r.objective << "\n"
        << label << "distance: " << ordered_pair_count(*r.objective) << "\n";
    if (r.status == SolveStatus::optimal && !o.output.empty()) {
      write_file(o.output, to_json(decode_ultrametric(d, m, r.assignment)));
    }
  }
  return r.status == SolveStatus::optimal ? kOk : kBudget;
}

int gen(const Options& o, std::ostream& out) {
  auto need_size = [&]() {
    if (!o.size) throw InputError("gadget " + o.gadget + " needs a size parameter");
    return *o.size;
  };
  std::string text;
  if (o.gadget == "hypercube-layers") {
    const EdgeDecomposition d = hypercube_layer_partition(need_size());
    text = o.dot ? to_dot(d) : to_json(d);
  } else {
    Graph g;
    if (o.gadget == "literal") {
      g = literal_graph();
    } else if (o.gadget == "extended-literal") {
      g = extended_literal_graph();
    } else if (o.gadget == "clause") {
      g = clause_gadget();
    } else if (o.gadget == "clique-pendant") {
      g = clique_pendant(need_size());
    } else if (o.gadget == "hypercube") {
      g = hypercube(need_size());
    } else {
      throw InputError("unknown gadget: " + o.gadget);
    }
    text = o.dot ? to_dot(g) : to_json(g);
  }
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
  }
  return kOk;
}

int reduce(const Options& o, std::ostream& out) {
  const NaeFormula f = parse_formula_json(read_file(o.input));
  const Graph g = nae3sat_graph(f);
  if (!o.output.empty()) write_file(o.output, to_json(g));
  if (!o.check) {
    if (o.output.empty()) {
      out << to_json(g);
    } else {
      out << "vertices: " << g.order() << "\nedges: " << g.size() << "\n";
    }
    return kOk;
  }
  const auto r = check_reduction(f, search_budget(o));
  out << "vertices: " << g.order() << "\nedges: " << g.size() << "\n";
  out << "nae-satisfiable: " << (r.satisfiable ? "yes" : "no") << "\n";
  out << "decomposable: " << (r.decomposable ? (*r.decomposable ? "yes" : "no") : "unknown") << "\n";
  out << "nodes: " << r.nodes << "\nverdict: " << to_string(r.verdict) << "\n";
  switch (r.verdict) {
    case ReductionVerdict::agree:
      return kOk;
    case ReductionVerdict::disagree:
      return kFalse;
    case ReductionVerdict::unknown:
      break;
  }
  return kBudget;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cographs, symbolic ultrametrics and cograph edge decompositions", "symtree"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  auto* c_check = app.add_subcommand("check-cograph", "Test whether a graph is a cograph");
  c_check->add_option("graph", o.input, "Graph JSON")->required();

  auto* c_cotree = app.add_subcommand("cotree", "Print the cotree of a cograph");
  c_cotree->add_option("graph", o.input, "Graph JSON")->required();
  c_cotree->add_option("-o,--output", o.output, "Write the Newick tree here");
  c_cotree->add_flag("--dot", o.dot, "Print the tree as DOT");

  auto* c_um = app.add_subcommand("check-um", "Test whether a symbolic map is a symbolic ultrametric");
  c_um->add_option("map", o.input, "Symbolic map JSON")->required();

  auto* c_rep = app.add_subcommand("represent", "Build the discriminating tree of a symbolic ultrametric");
  c_rep->add_option("map", o.input, "Symbolic map JSON")->required();
  c_rep->add_option("-o,--output", o.output, "Write the Newick tree here");

  auto* c_tc = app.add_subcommand("to-cotree", "Turn a tree representing a graph into its cotree");
  c_tc->add_option("tree", o.input, "Newick tree")->required();
  c_tc->add_option("graph", o.second, "Graph JSON")->required();
  c_tc->add_option("-o,--output", o.output, "Write the Newick cotree here");

  auto* c_dec = app.add_subcommand("decompose", "Cograph edge decomposition or partition");
  c_dec->add_option("graph", o.input, "Graph JSON")->required();
  c_dec->add_option("--kind", o.kind, "partition or decomposition")
      ->check(CLI::IsMember({"partition", "decomposition"}))
      ->capture_default_str();
  c_dec->add_option("--method", o.method, "coloring, exact or export-lp")
      ->required()
      ->check(CLI::IsMember({"coloring", "exact", "export-lp"}));
  c_dec->add_option("--k-max", o.k_max, "Upper bound on the number of classes (default: max degree + 1)");
  c_dec->add_option("--budget", o.budget, "Search node limit");
  c_dec->add_option("-o,--output", o.output, "Write the decomposition JSON (or LP file) here");
  c_dec->add_option("--dot", o.dot_path, "Write the decomposition as DOT here");

  auto* c_rep2 = app.add_subcommand("repair", "Closest symbolic ultrametric");
  c_rep2->add_option("map", o.input, "Symbolic map JSON")->required();
  c_rep2->add_option("--variant", o.variant, "edit, complete or delete")
      ->required()
      ->check(CLI::IsMember({"edit", "complete", "delete"}));
  c_rep2->add_option("--method", o.method, "exact or export-lp")
      ->required()
      ->check(CLI::IsMember({"exact", "export-lp"}));
  c_rep2->add_option("--budget", o.budget, "Solver node limit");
  c_rep2->add_option("-o,--output", o.output, "Write the repaired map JSON (or LP file) here");

  auto* c_gen = app.add_subcommand("gen", "Generate a gadget graph");
  c_gen->add_option("gadget", o.gadget,
                    "literal, extended-literal, clause, clique-pendant, hypercube or hypercube-layers")
      ->required();
  c_gen->add_option("size", o.size, "k for clique-pendant, dimension for hypercube, n for hypercube-layers");
  c_gen->add_option("-o,--output", o.output, "Write here instead of standard output");
  c_gen->add_flag("--dot", o.dot, "Emit DOT instead of JSON");

  auto* c_red = app.add_subcommand("reduce", "Build the graph of a monotone NAE 3-SAT formula");
  c_red->add_option("formula", o.input, "Formula JSON")->required();
  c_red->add_flag("--check", o.check, "Compare satisfiability with 2-decomposability");
  c_red->add_option("--budget", o.budget, "Search node limit for --check");
  c_red->add_option("-o,--output", o.output, "Write the graph JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    if (c_check->parsed()) return check_cograph(o, out);
    if (c_cotree->parsed()) return cotree(o, out);
    if (c_um->parsed()) return check_um(o, out);
    if (c_rep->parsed()) return represent(o, out);
    if (c_tc->parsed()) return to_cotree_cmd(o, out);
    if (c_dec->parsed()) return decompose(o, out);
    if (c_rep2->parsed()) return repair(o, out);
    if (c_gen->parsed()) return gen(o, out);
    if (c_red->parsed()) return reduce(o, out);
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace symtree::cli
