#include "blockcc/decompose.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace blockcc {

namespace {

std::string pivot_note(const PivotSelection& sel) {
  std::string text = "k=[";
  for (std::size_t t = 0; t < sel.first_nonzero.size(); ++t) {
    if (t > 0) text += ',';
    text += std::to_string(sel.first_nonzero[t] + 1);
  }
  text += "] q=" + std::to_string(sel.min_column + 1);
  text += " s=" + std::to_string(sel.pivot_row + 1);
  return text;
}

}  // namespace

SweepResult sweep_isolated(AdjacencyMatrix& m, Permutation& perm, StepLog* log) {
  std::size_t active = m.size();
  std::size_t isolated = 0;
  std::size_t pos = 0;
  while (pos < active) {
    const auto row = m.row(pos);
    const bool zero_row =
        std::all_of(row.begin(), row.begin() + active, [](std::uint8_t v) { return v == 0; });
    if (!zero_row) {
      ++pos;
      continue;
    }
    ++isolated;
    if (log && log->record_events)
      log->note("isolate", pos + 1, 0,
                "degree 0; moved to position " + std::to_string(active));
    if (pos != active - 1) {
      swap_vertices(m, perm, pos, active - 1);
      if (log) log->note_swap(pos + 1, 0, pos, active - 1);
    }
    --active;  // pos is re-examined, not advanced
  }
  return {isolated, active};
}

std::size_t first_nonzero_column(const AdjacencyMatrix& m, std::size_t row, std::size_t limit) {
  if (row >= m.size())
    throw Error(ErrorKind::PositionOutOfRange,
                "row " + std::to_string(row + 1) + " out of range 1.." + std::to_string(m.size()),
                row + 1);
  if (limit == npos || limit > m.size()) limit = m.size();
  const auto cells = m.row(row);
  for (std::size_t c = 0; c < limit; ++c)
    if (cells[c]) return c;
  throw Error(ErrorKind::ZeroRow,
              "row " + std::to_string(row + 1) + " has no nonzero entry", row + 1);
}

PivotSelection select_pivot(const AdjacencyMatrix& m, std::size_t first_row,
                            std::size_t active_count) {
  if (active_count > m.size())
    throw Error(ErrorKind::PositionOutOfRange,
                "active count " + std::to_string(active_count) + " exceeds size " +
                    std::to_string(m.size()));
  if (first_row >= active_count)
    throw Error(ErrorKind::EmptyCandidateRange,
                "no candidate rows in " + std::to_string(first_row + 1) + ".." +
                    std::to_string(active_count),
                first_row + 1);

  PivotSelection sel;
  sel.first_row = first_row;
  sel.first_nonzero.reserve(active_count - first_row);
  sel.min_column = npos;
  sel.pivot_row = first_row;
  for (std::size_t j = first_row; j < active_count; ++j) {
    const std::size_t k = first_nonzero_column(m, j, active_count);
    sel.first_nonzero.push_back(k);
    if (k < sel.min_column) {
      sel.min_column = k;
      sel.pivot_row = j;
    }
  }
  return sel;
}

bool cut_holds(const AdjacencyMatrix& m, std::size_t prefix, std::size_t active_count) {
  if (active_count > m.size())
    throw Error(ErrorKind::PositionOutOfRange,
                "active count " + std::to_string(active_count) + " exceeds size " +
                    std::to_string(m.size()));
  if (prefix < 1 || prefix > active_count)
    throw Error(ErrorKind::PositionOutOfRange,
                "cut position " + std::to_string(prefix) + " out of range 1.." +
                    std::to_string(active_count),
                prefix);

  bool upper_zero = true;
  for (std::size_t i = 0; i < prefix && upper_zero; ++i) {
    const auto row = m.row(i);
    for (std::size_t j = prefix; j < active_count; ++j)
      if (row[j]) {
        upper_zero = false;
        break;
      }
  }
  bool lower_zero = true;
  for (std::size_t t = prefix; t < active_count && lower_zero; ++t) {
    const auto row = m.row(t);
    for (std::size_t j = 0; j < prefix; ++j)
      if (row[j]) {
        lower_zero = false;
        break;
      }
  }
  return upper_zero && lower_zero;
}

ConnectivityReport decompose(const AdjacencyMatrix& input, const DecomposeOptions& opts) {
  ConnectivityReport rep;
  rep.permuted_matrix = input;
  rep.permutation = Permutation(input.size());

  StepLog log;
  log.record_events = opts.record_trace;

  AlgorithmState st;
  st.original_count = input.size();

  AdjacencyMatrix& m = rep.permuted_matrix;
  Permutation& perm = rep.permutation;

  const SweepResult sweep = sweep_isolated(m, perm, &log);
  st.isolated_count = sweep.isolated_count;
  st.active_count = sweep.active_count;
  st.boundaries = {0};

  if (st.active_count == 0) {
    st.cut_count = 0;
  } else {
    st.cut_count = 1;
    st.prefix = 2;
    st.first_unplaced = 2;
    while (st.prefix + 1 <= st.active_count) {
      assert(st.first_unplaced == st.prefix);

      const PivotSelection sel = select_pivot(m, st.prefix - 1, st.active_count);
      if (log.record_events) log.note("pivot", st.prefix, st.first_unplaced, pivot_note(sel));

      // Unless the previous position closed a block, some candidate row must
      // reach back into the open prefix.
      assert(st.boundaries.back() == st.prefix - 1 || sel.min_column + 1 < st.prefix);

      if (sel.pivot_row != st.prefix - 1) {
        swap_vertices(m, perm, st.prefix - 1, sel.pivot_row);
        log.note_swap(st.prefix, st.first_unplaced, st.prefix - 1, sel.pivot_row);
      }

      const bool held = cut_holds(m, st.prefix, st.active_count);
      log.note("cut", st.prefix, st.first_unplaced, held ? "holds" : "does not hold");
      if (held) {
        st.boundaries.push_back(st.prefix);
        ++st.cut_count;
        ++st.boundary_count;
        log.note("boundary", st.prefix, st.first_unplaced,
                 "block of size " + std::to_string(st.prefix - st.boundaries[st.boundaries.size() - 2]));
      }
      ++st.prefix;
      ++st.first_unplaced;
    }
    st.boundaries.push_back(st.active_count);
    ++st.boundary_count;
    log.note("boundary", st.active_count, st.first_unplaced,
             "final block of size " +
                 std::to_string(st.active_count - st.boundaries[st.boundaries.size() - 2]));
  }

  for (std::size_t k = 1; k < st.boundaries.size(); ++k) {
    std::vector<std::size_t> component;
    component.reserve(st.boundaries[k] - st.boundaries[k - 1]);
    for (std::size_t pos = st.boundaries[k - 1]; pos < st.boundaries[k]; ++pos)
      component.push_back(perm.label_at(pos));
    std::sort(component.begin(), component.end());
    rep.components.push_back(std::move(component));
  }
  for (std::size_t pos = st.active_count; pos < st.original_count; ++pos)
    rep.components.push_back({perm.label_at(pos)});

  rep.isolated_count = st.isolated_count;
  rep.cut_count = st.cut_count;
  rep.boundaries = st.boundaries;
  rep.num_components = st.cut_count + st.isolated_count;
  rep.is_connected = rep.num_components <= 1;
  rep.swap_count = log.swap_count;
  rep.trace = std::move(log.events);

  assert(rep.components.size() == rep.num_components);
  return rep;
}

}  // namespace blockcc
