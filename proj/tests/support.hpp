#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "symtree/graph.hpp"
#include "symtree/symbolic_map.hpp"

namespace symtree::testing {

using NamedEdges = std::vector<std::pair<std::string, std::string>>;

inline Graph make_graph(std::vector<std::string> vertices, const NamedEdges& edges) {
  return Graph(std::move(vertices), edges);
}

/// Zero-padded names, so lexicographic and numeric order agree.
inline std::string vname(std::size_t i) { return (i < 10 ? "0" : "") + std::to_string(i); }

inline std::vector<std::string> vnames(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(vname(i));
  return out;
}

/// Bit k of `mask` decides the k-th pair (i, j), i < j, in lexicographic order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      if (mask >> k & 1) edges.push_back({i, j});
    }
  }
  return Graph::from_indexed(vnames(n), std::move(edges));
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return Graph::from_indexed(vnames(n), std::move(edges));
}

/// Random cograph: split the vertex set recursively into 2..4 random parts and
/// join the parts completely or not at all.
inline Graph random_cograph(std::mt19937_64& rng, std::size_t n) {
  std::vector<Edge> edges;
  auto split = [&](auto&& self, std::vector<std::size_t> set) -> void {
    if (set.size() < 2) return;
    std::shuffle(set.begin(), set.end(), rng);
    const std::size_t parts = std::uniform_int_distribution<std::size_t>(2, std::min<std::size_t>(4, set.size()))(rng);
    std::vector<std::vector<std::size_t>> groups(parts);
    for (std::size_t i = 0; i < parts; ++i) groups[i].push_back(set[i]);
    for (std::size_t i = parts; i < set.size(); ++i) {
      groups[std::uniform_int_distribution<std::size_t>(0, parts - 1)(rng)].push_back(set[i]);
    }
    if (std::bernoulli_distribution(0.5)(rng)) {
      for (std::size_t a = 0; a < parts; ++a) {
        for (std::size_t b = a + 1; b < parts; ++b) {
          for (std::size_t x : groups[a]) {
            for (std::size_t y : groups[b]) edges.push_back(make_edge(x, y));
          }
        }
      }
    }
    for (auto& g : groups) self(self, g);
  };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  split(split, all);
  return Graph::from_indexed(vnames(n), std::move(edges));
}

inline std::vector<std::string> color_names(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(std::string(1, static_cast<char>('A' + i)));
  return out;
}

inline SymbolicMap random_map(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<std::uint16_t> color(0, static_cast<std::uint16_t>(m - 1));
  std::vector<std::uint16_t> values(n * (n - 1) / 2);
  for (auto& v : values) v = color(rng);
  return SymbolicMap::from_indexed(vnames(n), color_names(m), std::move(values));
}

/// Random symbolic ultrametric: split the elements recursively into 2..3
/// parts and give all pairs across parts one random color.
inline SymbolicMap random_ultrametric(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<std::uint16_t> color(0, static_cast<std::uint16_t>(m - 1));
  std::vector<std::uint16_t> values(n * (n - 1) / 2);
  auto index = [n](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
  };
  auto split = [&](auto&& self, std::vector<std::size_t> set) -> void {
    if (set.size() < 2) return;
    std::shuffle(set.begin(), set.end(), rng);
    const std::size_t parts = std::uniform_int_distribution<std::size_t>(2, std::min<std::size_t>(3, set.size()))(rng);
    std::vector<std::vector<std::size_t>> groups(parts);
    for (std::size_t i = 0; i < parts; ++i) groups[i].push_back(set[i]);
    for (std::size_t i = parts; i < set.size(); ++i) {
      groups[std::uniform_int_distribution<std::size_t>(0, parts - 1)(rng)].push_back(set[i]);
    }
    const std::uint16_t c = color(rng);
    for (std::size_t a = 0; a < parts; ++a) {
      for (std::size_t b = a + 1; b < parts; ++b) {
        for (std::size_t x : groups[a]) {
          for (std::size_t y : groups[b]) values[index(x, y)] = c;
        }
      }
    }
    for (auto& g : groups) self(self, g);
  };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  split(split, all);
  return SymbolicMap::from_indexed(vnames(n), color_names(m), std::move(values));
}

}  // namespace symtree::testing
