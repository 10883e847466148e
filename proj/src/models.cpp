#include "symtree/models.hpp"

#include "symtree/error.hpp"

namespace symtree {

std::string_view to_string(EditVariant v) {
  switch (v) {
    case EditVariant::edit:
      return "edit";
    case EditVariant::complete:
      return "complete";
    case EditVariant::remove:
      break;
  }
  return "delete";
}

EditVariant parse_edit_variant(std::string_view text) {
  if (text == "edit") return EditVariant::edit;
  if (text == "complete") return EditVariant::complete;
  if (text == "delete") return EditVariant::remove;
  throw InputError("unknown variant: " + std::string(text));
}

std::string pair_variable_name(std::string_view tag, std::string_view x, std::string_view y) {
  std::string out = "E_";
  out += tag;
  out += '_';
  out += x;
  out += '_';
  out += y;
  return out;
}

IlpModel build_ultrametric_model(const SymbolicMap& d, EditVariant variant) {
  const std::size_t n = d.element_count();
  const std::size_t colors = d.colors().size();
  const auto& names = d.elements();
  const auto null = d.find_color(kNullColor);
  if (variant != EditVariant::edit && !null) {
    throw InputError(std::string(to_string(variant)) + " needs the color \"0\" in the alphabet");
  }

  IlpModel m;
  m.add_comment("closest symbolic ultrametric, variant " + std::string(to_string(variant)));
  m.add_comment("elements: " + std::to_string(n) + ", colors: " + std::to_string(colors));
  m.add_comment("one variable per unordered pair and color");
  m.add_comment("objective counts changed unordered pairs; |D| is twice the optimum");

  // var(i, j, c) for i < j.
  std::vector<std::size_t> first(d.pair_count());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      first[d.pair_index(i, j)] = m.variable_count();
      for (std::size_t c = 0; c < colors; ++c) m.add_variable(pair_variable_name(d.colors()[c], names[i], names[j]));
    }
  }
  auto var = [&](std::size_t i, std::size_t j, std::size_t c) {
    if (i > j) std::swap(i, j);
    return first[d.pair_index(i, j)] + c;
  };

  std::vector<Term> objective;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Term> one;
      for (std::size_t c = 0; c < colors; ++c) {
        one.push_back({var(i, j, c), 1});
        if (c != d.color_of(i, j)) objective.push_back({var(i, j, c), 1});
      }
      m.add_constraint(std::move(one), Sense::eq, 1);
    }
  }
  m.set_objective(std::move(objective));

  if (variant != EditVariant::edit) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::size_t c = d.color_of(i, j);
        if (variant == EditVariant::complete) {
          if (c != *null) m.add_constraint({{var(i, j, c), 1}}, Sense::eq, 1);
        } else if (c == *null) {
          m.add_constraint({{var(i, j, c), 1}}, Sense::eq, 1);
        } else {
          m.add_constraint({{var(i, j, c), 1}, {var(i, j, *null), 1}}, Sense::eq, 1);
        }
      }
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (x == y || x == z || y == z) continue;
        for (std::size_t a = 0; a < colors; ++a) {
          for (std::size_t b = 0; b < colors; ++b) {
            for (std::size_t c = 0; c < colors; ++c) {
              if (a == b || a == c || b == c) continue;
              m.add_constraint({{var(x, y, a), 1}, {var(y, z, b), 1}, {var(x, z, c), 1}}, Sense::le, 2);
            }
          }
        }
      }
    }
  }

  for (std::size_t c = 0; c < colors; ++c) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t u = 0; u < n; ++u) {
          for (std::size_t v = 0; v < n; ++v) {
            if (x == y || x == u || x == v || y == u || y == v || u == v) continue;
            m.add_constraint({{var(x, y, c), 1},
                              {var(y, u, c), 1},
                              {var(u, v, c), 1},
                              {var(x, u, c), -1},
                              {var(x, v, c), -1},
                              {var(y, v, c), -1}},
                             Sense::le, 2);
          }
        }
      }
    }
  }
  return m;
}

SymbolicMap decode_ultrametric(const SymbolicMap& d, const IlpModel& m, const std::vector<std::uint8_t>& assignment) {
  if (assignment.size() != m.variable_count()) throw InputError("assignment does not match the model");
  const auto& names = d.elements();
  std::vector<std::uint16_t> values(d.pair_count());
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      int chosen = -1;
      for (std::size_t c = 0; c < d.colors().size(); ++c) {
        auto id = m.find_variable(pair_variable_name(d.colors()[c], names[i], names[j]));
        if (!id) throw InputError("model lacks variable for pair " + names[i] + "," + names[j]);
        if (assignment[*id]) {
          if (chosen >= 0) throw InputError("assignment gives a pair two colors");
          chosen = static_cast<int>(c);
        }
      }
      if (chosen < 0) throw InputError("assignment leaves a pair uncolored");
      values[d.pair_index(i, j)] = static_cast<std::uint16_t>(chosen);
    }
  }
  return SymbolicMap::from_indexed(d.elements(), d.colors(), std::move(values));
}

IlpModel build_decomposition_model(const Graph& g, DecompositionKind kind, std::size_t k_max) {
  if (k_max == 0) throw InputError("k_max must be at least 1");
  const std::size_t n = g.order();
  IlpModel m;
  m.add_comment("cograph " + std::string(to_string(kind)) + ", k_max = " + std::to_string(k_max));
  m.add_comment("vertices: " + std::to_string(n) + ", edges: " + std::to_string(g.size()));
  m.add_comment("variables exist only for edges; non-edge variables are omitted, i.e. fixed to zero");

  std::vector<std::size_t> active;
  for (std::size_t i = 1; i <= k_max; ++i) active.push_back(m.add_variable("M_" + std::to_string(i)));
  std::vector<std::size_t> first(g.size());
  for (std::size_t e = 0; e < g.size(); ++e) {
    first[e] = m.variable_count();
    for (std::size_t i = 1; i <= k_max; ++i) {
      m.add_variable(pair_variable_name(std::to_string(i), g.name(g.edges()[e].u), g.name(g.edges()[e].v)));
    }
  }
  auto edge_id = [&](std::size_t a, std::size_t b) -> std::optional<std::size_t> {
    if (!g.adjacent(a, b)) return std::nullopt;
    return g.edge_index(make_edge(a, b));
  };

  std::vector<Term> objective;
  for (std::size_t v : active) objective.push_back({v, 1});
  m.set_objective(std::move(objective));

  for (std::size_t e = 0; e < g.size(); ++e) {
    std::vector<Term> cover;
    for (std::size_t i = 0; i < k_max; ++i) cover.push_back({first[e] + i, 1});
    m.add_constraint(std::move(cover), kind == DecompositionKind::partition ? Sense::eq : Sense::ge, 1);
  }

  const auto big = static_cast<std::int64_t>(n * n);
  for (std::size_t i = 0; i < k_max; ++i) {
    std::vector<Term> terms;
    for (std::size_t e = 0; e < g.size(); ++e) terms.push_back({first[e] + i, 1});
    terms.push_back({active[i], -big});
    m.add_constraint(std::move(terms), Sense::le, 0);
  }

  for (std::size_t i = 0; i < k_max; ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y : g.neighbors(x)) {
        for (std::size_t u : g.neighbors(y)) {
          if (u == x) continue;
          for (std::size_t v : g.neighbors(u)) {
            if (v == x || v == y) continue;
            std::vector<Term> terms{{first[*edge_id(x, y)] + i, 1},
                                    {first[*edge_id(y, u)] + i, 1},
                                    {first[*edge_id(u, v)] + i, 1}};
            for (auto [a, b] : {std::pair{x, u}, std::pair{x, v}, std::pair{y, v}}) {
              if (auto e = edge_id(a, b)) terms.push_back({first[*e] + i, -1});
            }
            m.add_constraint(std::move(terms), Sense::le, 2);
          }
        }
      }
    }
  }

  for (std::size_t i = 0; i + 1 < k_max; ++i) {
    m.add_constraint({{active[i], 1}, {active[i + 1], -1}}, Sense::ge, 0);
  }
  return m;
}

EdgeDecomposition decode_decomposition(const Graph& g, DecompositionKind kind, std::size_t k_max, const IlpModel& m,
                                       const std::vector<std::uint8_t>& assignment) {
  if (assignment.size() != m.variable_count()) throw InputError("assignment does not match the model");
  std::vector<std::vector<Edge>> classes(k_max);
  for (std::size_t e = 0; e < g.size(); ++e) {
    const Edge& edge = g.edges()[e];
    for (std::size_t i = 0; i < k_max; ++i) {
      auto id = m.find_variable(pair_variable_name(std::to_string(i + 1), g.name(edge.u), g.name(edge.v)));
      if (!id) throw InputError("model lacks a variable for edge " + g.name(edge.u) + "-" + g.name(edge.v));
      if (assignment[*id]) classes[i].push_back(edge);
    }
  }
  std::erase_if(classes, [](const auto& c) { return c.empty(); });
  return EdgeDecomposition(g, std::move(classes), kind);
}

}  // namespace symtree
