#pragma once

#include <cstddef>
#include <vector>

#include "blockcc/matrix.hpp"

namespace blockcc {

/// Bijection between original vertex labels and current positions. Starts as
/// the identity; records every interchange, so the current matrix can always
/// be reproduced from the original one.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::size_t n);

  std::size_t size() const { return label_at_.size(); }

  std::size_t position_of(std::size_t label) const;
  std::size_t label_at(std::size_t position) const;

  /// Original label at each position (the inverse permutation as an array).
  const std::vector<std::size_t>& labels() const { return label_at_; }

  void swap_positions(std::size_t a, std::size_t b);
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

private:
  std::vector<std::size_t> position_of_;
  std::vector<std::size_t> label_at_;
};

/// Interchanges positions a and b in the matrix and records it in the
/// permutation. a == b is a no-op.
void swap_vertices(AdjacencyMatrix& m, Permutation& perm, std::size_t a, std::size_t b);

/// Rebuilds the permuted matrix from the original: entry (p,q) of the result
/// is entry (label_at(p), label_at(q)) of the original.
AdjacencyMatrix apply_permutation(const AdjacencyMatrix& original, const Permutation& perm);

}  // namespace blockcc
