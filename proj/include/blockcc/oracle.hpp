#pragma once

#include <cstddef>
#include <vector>

#include "blockcc/matrix.hpp"

namespace blockcc {

enum class OracleMethod { union_find, breadth_first };

struct PartitionOracleResult {
  /// Disjoint cover of the vertex set, normalized: labels sorted within each
  /// component, components sorted by smallest label.
  std::vector<std::vector<std::size_t>> partition;
  std::size_t num_components = 0;
};

/// Disjoint-set forest with union by size and path compression.
class DisjointSet {
public:
  explicit DisjointSet(std::size_t n);

  std::size_t find(std::size_t x);
  /// Merges the sets of a and b; returns false if already joined.
  bool unite(std::size_t a, std::size_t b);
  std::size_t set_count() const { return count_; }

private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t count_ = 0;
};

/// Ground-truth connected components, by either method. The two methods are
/// independent implementations and agree on every input.
PartitionOracleResult oracle_components(const AdjacencyMatrix& m, OracleMethod method);

/// Sorts labels within each part and parts by smallest label.
std::vector<std::vector<std::size_t>> normalize_partition(
    std::vector<std::vector<std::size_t>> partition);

bool same_partition(const std::vector<std::vector<std::size_t>>& a,
                    const std::vector<std::vector<std::size_t>>& b);

}  // namespace blockcc
