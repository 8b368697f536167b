#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "blockcc/decompose.hpp"
#include "blockcc/generate.hpp"
#include "blockcc/matrix.hpp"

namespace helpers {

// 5-vertex graph with edges (1,2),(1,4),(2,4),(3,5): components {1,2,4} and
// {3,5} in 1-based labels. Used as the golden example throughout the suite.
inline blockcc::RawMatrix two_block_raw() {
  return {{0, 1, 0, 1, 0},
          {1, 0, 0, 1, 0},
          {0, 0, 0, 0, 1},
          {1, 1, 0, 0, 0},
          {0, 0, 1, 0, 0}};
}

inline blockcc::AdjacencyMatrix two_block_example() {
  blockcc::AdjacencyMatrix m(5);
  m.add_edge(0, 1);
  m.add_edge(0, 3);
  m.add_edge(1, 3);
  m.add_edge(2, 4);
  return m;
}

// The same graph in block-diagonal order: triangle block then edge block.
inline constexpr const char* two_block_permuted_text =
    "0 1 1 0 0\n"
    "1 0 1 0 0\n"
    "1 1 0 0 0\n"
    "0 0 0 0 1\n"
    "0 0 0 1 0\n";

inline blockcc::RawMatrix random_raw_symmetric(std::size_t n, double p, std::mt19937_64& rng) {
  blockcc::RawMatrix raw(n, std::vector<int>(n, 0));
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) raw[i][j] = raw[j][i] = 1;
  return raw;
}

inline blockcc::AdjacencyMatrix random_matrix(std::size_t n, double p, std::mt19937_64& rng) {
  return blockcc::validate_adjacency(random_raw_symmetric(n, p, rng));
}

// --- independent brute-force oracles -------------------------------------

inline std::size_t zero_row_count(const blockcc::AdjacencyMatrix& m) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m.degree(i) == 0) ++count;
  return count;
}

inline std::size_t naive_first_nonzero(const blockcc::AdjacencyMatrix& m, std::size_t row,
                                       std::size_t limit) {
  for (std::size_t c = 0; c < std::min(limit, m.size()); ++c)
    if (m(row, c)) return c;
  return blockcc::npos;
}

// Exhaustive argmin over (first-nonzero column, row) pairs; the lexicographic
// minimum makes the smallest-row tie-break explicit.
inline std::pair<std::size_t, std::size_t> naive_pivot(const blockcc::AdjacencyMatrix& m,
                                                       std::size_t first, std::size_t active) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = first; j < active; ++j)
    pairs.emplace_back(naive_first_nonzero(m, j, active), j);
  const auto it = std::min_element(pairs.begin(), pairs.end());
  return {it->second, it->first};  // (row, column)
}

inline bool is_simple_symmetric(const blockcc::AdjacencyMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m(i, i)) return false;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m(i, j) != m(j, i)) return false;
  }
  return true;
}

inline std::vector<std::size_t> sorted_degrees(const blockcc::AdjacencyMatrix& m) {
  auto degrees = m.degree_sequence();
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

// --- seeded test corpus ----------------------------------------------------

// Deterministic mixed-family recipe; seed s covers family s mod 7.
inline blockcc::GraphSpec corpus_spec(std::uint64_t seed, std::size_t max_n) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull);
  blockcc::GraphSpec spec;
  spec.seed = rng();

  std::uniform_int_distribution<std::size_t> n_dist(0, max_n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = n_dist(rng);

  switch (seed % 7) {
    case 0: {
      spec.family = blockcc::GraphFamily::planted_components;
      std::uniform_int_distribution<std::size_t> count_dist(1, 6);
      const std::size_t blocks = count_dist(rng);
      const std::size_t cap = std::max<std::size_t>(1, max_n / blocks);
      std::uniform_int_distribution<std::size_t> size_dist(1, cap);
      for (std::size_t b = 0; b < blocks; ++b) spec.sizes.push_back(size_dist(rng));
      spec.edge_probability = unit(rng);
      break;
    }
    case 1: {
      spec.family = blockcc::GraphFamily::erdos_renyi;
      spec.n = n;
      // half the instances near the connectivity threshold, half anywhere
      spec.edge_probability = unit(rng) < 0.5
                                  ? unit(rng) * 4.0 / static_cast<double>(std::max<std::size_t>(n, 1))
                                  : unit(rng);
      spec.edge_probability = std::min(spec.edge_probability, 1.0);
      break;
    }
    case 2:
      spec.family = blockcc::GraphFamily::path;
      spec.n = n;
      break;
    case 3:
      spec.family = blockcc::GraphFamily::cycle;
      spec.n = n < 3 ? 0 : n;
      break;
    case 4:
      spec.family = blockcc::GraphFamily::complete;
      spec.n = n;
      break;
    case 5:
      spec.family = blockcc::GraphFamily::star;
      spec.n = n;
      break;
    default:
      spec.family = blockcc::GraphFamily::null_graph;
      spec.n = n;
      break;
  }
  return spec;
}

}  // namespace helpers
