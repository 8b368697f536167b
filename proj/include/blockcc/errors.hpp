#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blockcc {

enum class ErrorKind {
  NotSquare,
  NonBinaryEntry,
  Asymmetric,
  SelfLoop,
  PositionOutOfRange,
  ZeroRow,
  EmptyCandidateRange,
  ParseError,
  LabelOutOfRange,
  UnsupportedHeader,
  RaggedRows,
  InvalidSpec,
  UnknownNeighbor,
};

/// Library error. Positions and line numbers carried by an error (and named
/// in its message) are 1-based.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message, std::size_t a = 0, std::size_t b = 0)
      : std::runtime_error(message), kind_(kind), a_(a), b_(b) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// First 1-based position (row, vertex or input line), 0 if none.
  std::size_t pos_a() const noexcept { return a_; }
  /// Second 1-based position (column), 0 if none.
  std::size_t pos_b() const noexcept { return b_; }

private:
  ErrorKind kind_;
  std::size_t a_;
  std::size_t b_;
};

}  // namespace blockcc
