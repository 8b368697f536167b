#include "blockcc/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace blockcc {

namespace {

[[noreturn]] void out_of_range(const char* what, std::size_t value, std::size_t n) {
  throw Error(ErrorKind::PositionOutOfRange,
              std::string(what) + " " + std::to_string(value + 1) + " out of range 1.." +
                  std::to_string(n),
              value + 1);
}

}  // namespace

bool AdjacencyMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_) out_of_range("row", i, n_);
  if (j >= n_) out_of_range("column", j, n_);
  return (*this)(i, j);
}

void AdjacencyMatrix::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_) out_of_range("vertex", u, n_);
  if (v >= n_) out_of_range("vertex", v, n_);
  if (u == v)
    throw Error(ErrorKind::SelfLoop, "self loop at vertex " + std::to_string(u + 1), u + 1);
  cells_[u * n_ + v] = 1;
  cells_[v * n_ + u] = 1;
}

std::size_t AdjacencyMatrix::degree(std::size_t i) const {
  if (i >= n_) out_of_range("row", i, n_);
  const auto r = row(i);
  return static_cast<std::size_t>(std::count(r.begin(), r.end(), std::uint8_t{1}));
}

std::vector<std::size_t> AdjacencyMatrix::degree_sequence() const {
  std::vector<std::size_t> degrees(n_);
  for (std::size_t i = 0; i < n_; ++i) degrees[i] = degree(i);
  return degrees;
}

std::size_t AdjacencyMatrix::edge_count() const {
  const auto degrees = degree_sequence();
  return std::accumulate(degrees.begin(), degrees.end(), std::size_t{0}) / 2;
}

void AdjacencyMatrix::swap_positions(std::size_t a, std::size_t b) {
  if (a >= n_) out_of_range("position", a, n_);
  if (b >= n_) out_of_range("position", b, n_);
  if (a == b) return;
  std::swap_ranges(cells_.begin() + a * n_, cells_.begin() + (a + 1) * n_,
                   cells_.begin() + b * n_);
  for (std::size_t i = 0; i < n_; ++i) std::swap(cells_[i * n_ + a], cells_[i * n_ + b]);
}

AdjacencyMatrix validate_adjacency(const RawMatrix& raw) {
  const std::size_t n = raw.size();
  for (const auto& row : raw)
    if (row.size() != n) throw Error(ErrorKind::NotSquare, "input matrix is not square");

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int v = raw[i][j];
      if (v != 0 && v != 1)
        throw Error(ErrorKind::NonBinaryEntry,
                    "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") is " + std::to_string(v) + ", expected 0 or 1",
                    i + 1, j + 1);
      if (i == j && v != 0)
        throw Error(ErrorKind::SelfLoop, "self loop at vertex " + std::to_string(i + 1), i + 1);
      if (j > i && raw[i][j] != raw[j][i])
        throw Error(ErrorKind::Asymmetric,
                    "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") differs from its transpose",
                    i + 1, j + 1);
    }
  }

  AdjacencyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (raw[i][j] == 1) m.add_edge(i, j);
  return m;
}

RawMatrix symmetrized(RawMatrix raw) {
  const std::size_t n = raw.size();
  for (const auto& row : raw)
    if (row.size() != n) throw Error(ErrorKind::NotSquare, "input matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int v = (raw[i][j] != 0 || raw[j][i] != 0) ? 1 : 0;
      if ((raw[i][j] == 0 || raw[i][j] == 1) && (raw[j][i] == 0 || raw[j][i] == 1))
        raw[i][j] = raw[j][i] = v;
    }
  return raw;
}

}  // namespace blockcc
