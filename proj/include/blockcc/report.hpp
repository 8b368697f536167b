#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blockcc/matrix.hpp"
#include "blockcc/permutation.hpp"

namespace blockcc {

/// One step of a decomposition run, for trace output.
/// step is one of: isolate, pivot, swap, cut, boundary.
struct TraceEvent {
  std::string step;
  std::size_t i = 0;  // prefix size under consideration (1-based position)
  std::size_t p = 0;  // first unplaced row, 1-based; 0 during the isolated sweep
  std::size_t a = 0;  // interchange positions, 1-based; swap events only
  std::size_t b = 0;
  std::string note;

  bool operator==(const TraceEvent&) const = default;
};

/// Outcome of a block-diagonal decomposition.
///
/// The permuted matrix equals the original with rows and columns reordered by
/// `permutation`, and splits into one diagonal block per component: positions
/// boundaries[k-1]+1 .. boundaries[k] (1-based) hold component k, all degree-0
/// vertices sit at the tail. num_components == cut_count + isolated_count, and
/// the graph counts as connected when there is at most one component.
struct ConnectivityReport {
  bool is_connected = true;
  std::size_t num_components = 0;
  std::size_t isolated_count = 0;  // r: vertices of degree 0
  std::size_t cut_count = 0;       // l: diagonal blocks among the non-isolated vertices
  std::vector<std::size_t> boundaries;  // block boundaries as prefix sizes; boundaries[0] == 0
  std::vector<std::vector<std::size_t>> components;  // original labels, sorted within each
  Permutation permutation;
  AdjacencyMatrix permuted_matrix;
  std::size_t swap_count = 0;
  std::vector<TraceEvent> trace;  // filled only when tracing is requested

  bool operator==(const ConnectivityReport&) const = default;
};

}  // namespace blockcc
