#include "blockcc/permutation.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace blockcc {

namespace {

void check_position(std::size_t pos, std::size_t n) {
  if (pos >= n)
    throw Error(ErrorKind::PositionOutOfRange,
                "position " + std::to_string(pos + 1) + " out of range 1.." + std::to_string(n),
                pos + 1);
}

}  // namespace

Permutation::Permutation(std::size_t n) : position_of_(n), label_at_(n) {
  std::iota(position_of_.begin(), position_of_.end(), std::size_t{0});
  std::iota(label_at_.begin(), label_at_.end(), std::size_t{0});
}

std::size_t Permutation::position_of(std::size_t label) const {
  check_position(label, size());
  return position_of_[label];
}

std::size_t Permutation::label_at(std::size_t position) const {
  check_position(position, size());
  return label_at_[position];
}

void Permutation::swap_positions(std::size_t a, std::size_t b) {
  check_position(a, size());
  check_position(b, size());
  if (a == b) return;
  std::swap(label_at_[a], label_at_[b]);
  position_of_[label_at_[a]] = a;
  position_of_[label_at_[b]] = b;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < label_at_.size(); ++i)
    if (label_at_[i] != i) return false;
  return true;
}

void swap_vertices(AdjacencyMatrix& m, Permutation& perm, std::size_t a, std::size_t b) {
  check_position(a, m.size());
  check_position(b, m.size());
  m.swap_positions(a, b);
  perm.swap_positions(a, b);
}

AdjacencyMatrix apply_permutation(const AdjacencyMatrix& original, const Permutation& perm) {
  const std::size_t n = original.size();
  AdjacencyMatrix result(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      if (original(perm.label_at(p), perm.label_at(q))) result.add_edge(p, q);
  return result;
}

}  // namespace blockcc
