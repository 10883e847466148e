#include "symtree/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

#include "symtree/error.hpp"

namespace symtree {

namespace {

using Adjacency = std::array<std::uint8_t, kCographOracleMaxOrder>;

bool has_induced_p4(const Adjacency& adj, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          const std::uint8_t set = static_cast<std::uint8_t>(1u << a | 1u << b | 1u << c | 1u << d);
          int edges = 0;
          int ones = 0;
          int twos = 0;
          for (std::size_t v : {a, b, c, d}) {
            const int deg = std::popcount(static_cast<unsigned>(adj[v] & set));
            edges += deg;
            ones += deg == 1;
            twos += deg == 2;
          }
          if (edges == 6 && ones == 2 && twos == 2) return true;
        }
      }
    }
  }
  return false;
}

// Visits all k-subsets of {0..m-1} in lexicographic order until `f` returns true.
template <typename F>
bool any_subset(std::size_t m, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

CographEditResult brute_force_cograph_edit(const Graph& g, EditVariant variant) {
  const std::size_t n = g.order();
  if (n > kCographOracleMaxOrder) throw InputError("cograph edit oracle is capped at 7 vertices");
  Adjacency base{};
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const bool edge = g.adjacent(a, b);
      if (edge) {
        base[a] |= static_cast<std::uint8_t>(1u << b);
        base[b] |= static_cast<std::uint8_t>(1u << a);
      }
      if (variant == EditVariant::edit || (variant == EditVariant::complete) != edge) candidates.emplace_back(a, b);
    }
  }
  for (std::size_t k = 0; k <= candidates.size(); ++k) {
    Adjacency found{};
    const bool ok = any_subset(candidates.size(), k, [&](const std::vector<std::size_t>& pick) {
      Adjacency adj = base;
      for (std::size_t i : pick) {
        const auto [a, b] = candidates[i];
        adj[a] ^= static_cast<std::uint8_t>(1u << b);
        adj[b] ^= static_cast<std::uint8_t>(1u << a);
      }
      if (has_induced_p4(adj, n)) return false;
      found = adj;
      return true;
    });
    if (ok) {
      std::vector<Edge> edges;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          if (found[a] >> b & 1) edges.push_back({a, b});
        }
      }
      return {k, Graph::from_indexed(g.vertices(), std::move(edges))};
    }
  }
  throw InvariantError("no cograph reachable, yet complete and edgeless graphs are cographs");
}

namespace {

// Axiom check written against a plain value table, independent of check_axioms.
bool is_ultrametric(const std::vector<std::uint16_t>& val, std::size_t n) {
  std::array<std::array<int, kUltrametricOracleMaxElements>, kUltrametricOracleMaxElements> m{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) m[i][j] = m[j][i] = val[k++];
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t z = y + 1; z < n; ++z) {
        if (m[x][y] != m[x][z] && m[x][y] != m[y][z] && m[x][z] != m[y][z]) return false;
      }
    }
  }
  std::array<std::size_t, 4> p{};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          p = {a, b, c, d};
          do {
            const auto [x, y, u, v] = p;
            const int s = m[x][y];
            if (m[y][u] == s && m[u][v] == s && m[y][v] != s && m[x][v] == m[y][v] && m[x][u] == m[y][v]) return false;
          } while (std::next_permutation(p.begin(), p.end()));
        }
      }
    }
  }
  return true;
}

}  // namespace

UltrametricEditResult brute_force_ultrametric_edit(const SymbolicMap& d, EditVariant variant) {
  const std::size_t n = d.element_count();
  const std::size_t colors = d.colors().size();
  if (n > kUltrametricOracleMaxElements || colors > kUltrametricOracleMaxColors) {
    throw InputError("ultrametric edit oracle is capped at 5 elements and 3 colors");
  }
  const auto null = d.find_color(kNullColor);
  if (variant != EditVariant::edit && !null) throw InputError("variant needs the color \"0\"");

  std::vector<std::vector<std::uint16_t>> allowed(d.pair_count());
  for (std::size_t k = 0; k < d.pair_count(); ++k) {
    const std::uint16_t c = d.values()[k];
    for (std::uint16_t a = 0; a < colors; ++a) {
      bool ok = true;
      if (variant == EditVariant::complete) ok = c == *null || a == c;
      if (variant == EditVariant::remove) ok = a == c || a == *null;
      if (ok) allowed[k].push_back(a);
    }
  }

  std::vector<std::size_t> digit(d.pair_count(), 0);
  std::vector<std::uint16_t> current(d.pair_count());
  std::size_t best = d.pair_count() + 1;
  std::vector<std::uint16_t> best_values;
  while (true) {
    std::size_t changed = 0;
    for (std::size_t k = 0; k < digit.size(); ++k) {
      current[k] = allowed[k][digit[k]];
      changed += current[k] != d.values()[k];
    }
    if (changed < best && is_ultrametric(current, n)) {
      best = changed;
      best_values = current;
    }
    std::size_t k = 0;
    while (k < digit.size() && ++digit[k] == allowed[k].size()) digit[k++] = 0;
    if (k == digit.size()) break;
  }
  if (best_values.empty() && d.pair_count() > 0) throw InvariantError("no admissible symbolic ultrametric found");
  return {best, 2 * best, SymbolicMap::from_indexed(d.elements(), d.colors(), std::move(best_values))};
}

}  // namespace symtree
