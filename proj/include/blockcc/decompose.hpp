#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blockcc/matrix.hpp"
#include "blockcc/permutation.hpp"
#include "blockcc/report.hpp"

namespace blockcc {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct SweepResult {
  std::size_t isolated_count = 0;  // r
  std::size_t active_count = 0;    // n - r
};

/// Counts interchanges and, when enabled, records step-by-step trace events.
struct StepLog {
  bool record_events = false;
  std::size_t swap_count = 0;
  std::vector<TraceEvent> events;

  void note(std::string step, std::size_t i, std::size_t p, std::string text) {
    if (record_events) events.push_back({std::move(step), i, p, 0, 0, std::move(text)});
  }
  void note_swap(std::size_t i, std::size_t p, std::size_t a, std::size_t b) {
    ++swap_count;
    if (record_events) events.push_back({"swap", i, p, a + 1, b + 1, ""});
  }
};

/// Live variables of a decomposition run. All fields are counts / prefix
/// sizes, so they read the same 1-based as user-facing positions.
struct AlgorithmState {
  std::size_t original_count = 0;  // b
  std::size_t isolated_count = 0;  // r
  std::size_t active_count = 0;    // b - r
  std::size_t prefix = 0;          // i: vertices placed so far
  std::size_t first_unplaced = 0;  // p: stays equal to prefix at every loop head
  std::size_t cut_count = 0;       // l
  std::size_t boundary_count = 0;  // y
  std::vector<std::size_t> boundaries;  // prefix sizes; boundaries[0] == 0
};

/// Moves every degree-0 vertex behind the active prefix, re-examining a
/// position after each interchange. Afterwards each of the first
/// `active_count` rows has a 1 somewhere in the first `active_count` columns.
SweepResult sweep_isolated(AdjacencyMatrix& m, Permutation& perm, StepLog* log = nullptr);

/// Column of the leftmost 1 in the given row, scanning the first `limit`
/// columns (the whole row by default). Throws ZeroRow when there is none.
std::size_t first_nonzero_column(const AdjacencyMatrix& m, std::size_t row,
                                 std::size_t limit = npos);

struct PivotSelection {
  std::size_t first_row = 0;               // first candidate row
  std::vector<std::size_t> first_nonzero;  // leftmost-1 column per candidate row
  std::size_t min_column = 0;              // minimum of first_nonzero
  std::size_t pivot_row = 0;               // smallest candidate row attaining it
};

/// Scans candidate rows [first_row, active_count) and picks the row whose
/// leftmost 1 is earliest, ties broken towards the smaller row index.
PivotSelection select_pivot(const AdjacencyMatrix& m, std::size_t first_row,
                            std::size_t active_count);

/// True when no edge crosses the given prefix within the active range, i.e.
/// the upper-right and lower-left off-diagonal blocks are both entirely zero.
/// The two block checks are equivalent for a symmetric matrix but both are
/// evaluated.
bool cut_holds(const AdjacencyMatrix& m, std::size_t prefix, std::size_t active_count);

struct DecomposeOptions {
  bool record_trace = false;
};

/// Permutes the matrix into block-diagonal form, one block per connected
/// component, and reports the component structure together with the
/// permutation witness.
ConnectivityReport decompose(const AdjacencyMatrix& input, const DecomposeOptions& opts = {});

}  // namespace blockcc
