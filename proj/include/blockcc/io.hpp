#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blockcc/matrix.hpp"
#include "blockcc/report.hpp"

namespace blockcc {

/// Lines of "u v" with 1-based labels, optional leading header "n <count>";
/// blank lines and '#' comments are ignored; duplicate edges collapse.
/// Without a header, n is the largest label seen.
AdjacencyMatrix parse_edge_list(const std::string& text);

/// MatrixMarket, restricted to "coordinate pattern symmetric".
AdjacencyMatrix parse_matrix_market(const std::string& text);

/// Whitespace-separated 0/1 rows, one row per line.
AdjacencyMatrix parse_dense(const std::string& text);
/// Same, without validation; the raw grid can be symmetrized first.
RawMatrix parse_dense_raw(const std::string& text);

std::string emit_dense(const AdjacencyMatrix& m);
std::string emit_edge_list(const AdjacencyMatrix& m);
std::string emit_matrix_market(const AdjacencyMatrix& m);

/// Serializable view of a ConnectivityReport plus run metadata. Labels stay
/// 0-based in memory; JSON and text output are 1-based.
struct ReportDocument {
  std::string input_name;
  std::string tool_version;
  std::size_t n = 0;
  std::size_t edge_count = 0;
  bool is_connected = true;
  std::size_t num_components = 0;
  std::size_t isolated_count = 0;
  std::size_t cut_count = 0;
  std::vector<std::size_t> boundaries;
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> label_at;
  std::vector<TraceEvent> trace;

  bool operator==(const ReportDocument&) const = default;
};

ReportDocument make_report_document(const ConnectivityReport& report, std::string input_name,
                                    std::size_t edge_count, bool include_trace);

/// Deterministic JSON with a stable key order:
/// {n, is_connected, num_components, isolated_count, cut_count, boundaries,
///  components, permutation:{label_at}, meta:{input, edge_count, version},
///  trace?}. parse_report_json inverts it exactly.
std::string emit_report_json(const ReportDocument& doc);
ReportDocument parse_report_json(const std::string& text);

std::string emit_report_text(const ReportDocument& doc);

}  // namespace blockcc
