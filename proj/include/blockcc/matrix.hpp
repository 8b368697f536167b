#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "blockcc/errors.hpp"

namespace blockcc {

/// Dense adjacency matrix of a simple graph: 0/1 entries, symmetric, zero
/// diagonal. Positions and labels are 0-based in code; every user-facing
/// surface (diagnostics, file formats, reports) converts to 1-based.
class AdjacencyMatrix {
public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

  std::size_t size() const { return n_; }

  bool operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j] != 0; }

  /// Range-checked entry access.
  bool at(std::size_t i, std::size_t j) const;

  /// Sets both (u,v) and (v,u). Rejects self loops and out-of-range vertices.
  void add_edge(std::size_t u, std::size_t v);

  std::span<const std::uint8_t> row(std::size_t i) const {
    return {cells_.data() + i * n_, n_};
  }

  std::size_t degree(std::size_t i) const;
  std::vector<std::size_t> degree_sequence() const;
  std::size_t edge_count() const;

  /// Interchanges rows a,b then columns a,b. a == b is a no-op.
  void swap_positions(std::size_t a, std::size_t b);

  bool operator==(const AdjacencyMatrix&) const = default;

private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> cells_;
};

using RawMatrix = std::vector<std::vector<int>>;

/// Checks the simple-graph invariants on a raw integer grid and builds the
/// matrix. Reports the first offending position in row-major order.
AdjacencyMatrix validate_adjacency(const RawMatrix& raw);

/// Logical-OR of a square grid with its transpose; repairs half-specified
/// input before validation.
RawMatrix symmetrized(RawMatrix raw);

}  // namespace blockcc
