#include "blockcc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "json.hpp"

#include "blockcc/version.hpp"

namespace blockcc {

namespace {

constexpr std::size_t no_header = static_cast<std::size_t>(-1);

struct Line {
  std::size_t number = 0;  // 1-based
  std::string text;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back({number, std::move(line)});
  }
  return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(std::move(token));
  return tokens;
}

bool parse_size(const std::string& token, std::size_t& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

bool parse_int(const std::string& token, long long& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& message) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message, line);
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string join_labels(const std::vector<std::size_t>& labels) {
  std::string out = "{";
  for (std::size_t t = 0; t < labels.size(); ++t) {
    if (t > 0) out += ",";
    out += std::to_string(labels[t] + 1);
  }
  out += "}";
  return out;
}

}  // namespace

AdjacencyMatrix parse_edge_list(const std::string& text) {
  std::size_t declared = no_header;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t max_label = 0;
  bool first_significant = true;

  for (const Line& line : split_lines(text)) {
    std::string body = line.text;
    if (const auto hash = body.find('#'); hash != std::string::npos) body.resize(hash);
    const auto tokens = tokens_of(body);
    if (tokens.empty()) continue;

    if (first_significant && tokens[0] == "n") {
      first_significant = false;
      std::size_t count = 0;
      if (tokens.size() != 2 || !parse_size(tokens[1], count))
        parse_error(line.number, "header must be 'n <count>'");
      declared = count;
      continue;
    }
    first_significant = false;

    if (tokens.size() != 2) parse_error(line.number, "expected 'u v'");
    std::size_t u = 0, v = 0;
    if (!parse_size(tokens[0], u) || !parse_size(tokens[1], v))
      parse_error(line.number, "labels must be positive integers");
    if (u < 1 || v < 1 || (declared != no_header && (u > declared || v > declared)))
      throw Error(ErrorKind::LabelOutOfRange,
                  "line " + std::to_string(line.number) + ": vertex label out of range",
                  line.number);
    if (u == v)
      throw Error(ErrorKind::SelfLoop,
                  "line " + std::to_string(line.number) + ": self loop at vertex " +
                      std::to_string(u),
                  line.number);
    edges.emplace_back(u - 1, v - 1);
    max_label = std::max({max_label, u, v});
  }

  const std::size_t n = declared != no_header ? declared : max_label;
  AdjacencyMatrix m(n);
  for (const auto& [u, v] : edges) m.add_edge(u, v);
  return m;
}

AdjacencyMatrix parse_matrix_market(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0].text.rfind("%%MatrixMarket", 0) != 0)
    throw Error(ErrorKind::UnsupportedHeader, "missing %%MatrixMarket banner");

  const auto banner = tokens_of(lines[0].text);
  if (banner.size() < 5 || lowercase(banner[1]) != "matrix" ||
      lowercase(banner[2]) != "coordinate" || lowercase(banner[3]) != "pattern" ||
      lowercase(banner[4]) != "symmetric")
    throw Error(ErrorKind::UnsupportedHeader,
                "only 'matrix coordinate pattern symmetric' is supported");

  std::size_t rows = 0, cols = 0, declared_entries = 0;
  bool have_sizes = false;
  AdjacencyMatrix m;
  std::size_t seen_entries = 0;
  std::size_t last_line = 1;

  for (std::size_t idx = 1; idx < lines.size(); ++idx) {
    const Line& line = lines[idx];
    last_line = line.number;
    if (!line.text.empty() && line.text[0] == '%') continue;
    const auto tokens = tokens_of(line.text);
    if (tokens.empty()) continue;

    if (!have_sizes) {
      if (tokens.size() != 3 || !parse_size(tokens[0], rows) || !parse_size(tokens[1], cols) ||
          !parse_size(tokens[2], declared_entries))
        parse_error(line.number, "size line must be '<rows> <cols> <entries>'");
      if (rows != cols)
        throw Error(ErrorKind::NotSquare,
                    "matrix is " + std::to_string(rows) + "x" + std::to_string(cols));
      m = AdjacencyMatrix(rows);
      have_sizes = true;
      continue;
    }

    if (seen_entries == declared_entries)
      parse_error(line.number, "more entries than declared");
    std::size_t i = 0, j = 0;
    if (tokens.size() != 2 || !parse_size(tokens[0], i) || !parse_size(tokens[1], j))
      parse_error(line.number, "pattern entry must be '<row> <col>'");
    if (i < 1 || j < 1 || i > rows || j > rows)
      parse_error(line.number, "coordinate out of range");
    m.add_edge(i - 1, j - 1);  // rejects diagonal entries
    ++seen_entries;
  }

  if (!have_sizes) parse_error(last_line + 1, "missing size line");
  if (seen_entries != declared_entries)
    parse_error(last_line + 1, "expected " + std::to_string(declared_entries) +
                                   " entries, found " + std::to_string(seen_entries));
  return m;
}

RawMatrix parse_dense_raw(const std::string& text) {
  RawMatrix raw;
  for (const Line& line : split_lines(text)) {
    const auto tokens = tokens_of(line.text);
    if (tokens.empty()) continue;
    std::vector<int> row;
    row.reserve(tokens.size());
    for (std::size_t c = 0; c < tokens.size(); ++c) {
      long long value = 0;
      if (!parse_int(tokens[c], value))
        throw Error(ErrorKind::NonBinaryEntry,
                    "entry (" + std::to_string(raw.size() + 1) + "," + std::to_string(c + 1) +
                        ") is '" + tokens[c] + "', expected 0 or 1",
                    raw.size() + 1, c + 1);
      row.push_back(static_cast<int>(value));
    }
    if (!raw.empty() && row.size() != raw.front().size())
      throw Error(ErrorKind::RaggedRows,
                  "row " + std::to_string(raw.size() + 1) + " has " +
                      std::to_string(row.size()) + " entries, previous rows have " +
                      std::to_string(raw.front().size()),
                  raw.size() + 1);
    raw.push_back(std::move(row));
  }
  return raw;
}

AdjacencyMatrix parse_dense(const std::string& text) {
  return validate_adjacency(parse_dense_raw(text));
}

std::string emit_dense(const AdjacencyMatrix& m) {
  std::string out;
  const std::size_t n = m.size();
  out.reserve(n * (2 * n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) out += ' ';
      out += m(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::string emit_edge_list(const AdjacencyMatrix& m) {
  std::string out = "n " + std::to_string(m.size()) + "\n";
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = u + 1; v < m.size(); ++v)
      if (m(u, v)) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

std::string emit_matrix_market(const AdjacencyMatrix& m) {
  std::string out = "%%MatrixMarket matrix coordinate pattern symmetric\n";
  out += std::to_string(m.size()) + " " + std::to_string(m.size()) + " " +
         std::to_string(m.edge_count()) + "\n";
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j)) out += std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
  return out;
}

ReportDocument make_report_document(const ConnectivityReport& report, std::string input_name,
                                    std::size_t edge_count, bool include_trace) {
  ReportDocument doc;
  doc.input_name = std::move(input_name);
  doc.tool_version = version_string;
  doc.n = report.permutation.size();
  doc.edge_count = edge_count;
  doc.is_connected = report.is_connected;
  doc.num_components = report.num_components;
  doc.isolated_count = report.isolated_count;
  doc.cut_count = report.cut_count;
  doc.boundaries = report.boundaries;
  doc.components = report.components;
  doc.label_at = report.permutation.labels();
  if (include_trace) doc.trace = report.trace;
  return doc;
}

std::string emit_report_json(const ReportDocument& doc) {
  nlohmann::ordered_json j;
  j["n"] = doc.n;
  j["is_connected"] = doc.is_connected;
  j["num_components"] = doc.num_components;
  j["isolated_count"] = doc.isolated_count;
  j["cut_count"] = doc.cut_count;
  j["boundaries"] = doc.boundaries;
  auto components = nlohmann::ordered_json::array();
  for (const auto& component : doc.components) {
    auto labels = nlohmann::ordered_json::array();
    for (const std::size_t v : component) labels.push_back(v + 1);
    components.push_back(std::move(labels));
  }
  j["components"] = std::move(components);
  auto label_at = nlohmann::ordered_json::array();
  for (const std::size_t v : doc.label_at) label_at.push_back(v + 1);
  j["permutation"]["label_at"] = std::move(label_at);
  j["meta"]["input"] = doc.input_name;
  j["meta"]["edge_count"] = doc.edge_count;
  j["meta"]["version"] = doc.tool_version;
  if (!doc.trace.empty()) {
    auto trace = nlohmann::ordered_json::array();
    for (const TraceEvent& event : doc.trace) {
      nlohmann::ordered_json e;
      e["step"] = event.step;
      e["i"] = event.i;
      e["p"] = event.p;
      if (event.a != 0 || event.b != 0) {
        e["a"] = event.a;
        e["b"] = event.b;
      }
      e["note"] = event.note;
      trace.push_back(std::move(e));
    }
    j["trace"] = std::move(trace);
  }
  return j.dump(2) + "\n";
}

ReportDocument parse_report_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("report is not valid JSON: ") + e.what());
  }
  try {
    ReportDocument doc;
    doc.n = j.at("n").get<std::size_t>();
    doc.is_connected = j.at("is_connected").get<bool>();
    doc.num_components = j.at("num_components").get<std::size_t>();
    doc.isolated_count = j.at("isolated_count").get<std::size_t>();
    doc.cut_count = j.at("cut_count").get<std::size_t>();
    doc.boundaries = j.at("boundaries").get<std::vector<std::size_t>>();
    for (const auto& labels : j.at("components")) {
      std::vector<std::size_t> component;
      for (const auto& v : labels) {
        const std::size_t label = v.get<std::size_t>();
        if (label < 1) throw Error(ErrorKind::ParseError, "labels are 1-based");
        component.push_back(label - 1);
      }
      doc.components.push_back(std::move(component));
    }
    for (const auto& v : j.at("permutation").at("label_at")) {
      const std::size_t label = v.get<std::size_t>();
      if (label < 1) throw Error(ErrorKind::ParseError, "labels are 1-based");
      doc.label_at.push_back(label - 1);
    }
    doc.input_name = j.at("meta").at("input").get<std::string>();
    doc.edge_count = j.at("meta").at("edge_count").get<std::size_t>();
    doc.tool_version = j.at("meta").at("version").get<std::string>();
    if (j.contains("trace"))
      for (const auto& e : j.at("trace")) {
        TraceEvent event;
        event.step = e.at("step").get<std::string>();
        event.i = e.at("i").get<std::size_t>();
        event.p = e.at("p").get<std::size_t>();
        if (e.contains("a")) event.a = e.at("a").get<std::size_t>();
        if (e.contains("b")) event.b = e.at("b").get<std::size_t>();
        event.note = e.at("note").get<std::string>();
        doc.trace.push_back(std::move(event));
      }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad report document: ") + e.what());
  }
}

std::string emit_report_text(const ReportDocument& doc) {
  std::string out = doc.is_connected ? "connected\n" : "disconnected\n";
  out += "n=" + std::to_string(doc.n) + " r=" + std::to_string(doc.isolated_count) +
         " l=" + std::to_string(doc.cut_count) +
         " components=" + std::to_string(doc.num_components) + "\n";
  if (doc.isolated_count > 0) {
    std::vector<std::size_t> isolated;
    for (std::size_t k = doc.components.size() - doc.isolated_count; k < doc.components.size();
         ++k)
      isolated.push_back(doc.components[k].front());
    std::sort(isolated.begin(), isolated.end());
    out += "isolated vertices: " + join_labels(isolated) + "\n";
  }
  for (std::size_t k = 0; k < doc.components.size(); ++k)
    out += "component " + std::to_string(k + 1) + " (size " +
           std::to_string(doc.components[k].size()) + "): " + join_labels(doc.components[k]) +
           "\n";
  if (!doc.trace.empty()) {
    out += "trace:\n";
    for (const TraceEvent& event : doc.trace) {
      out += "  [" + event.step + "]";
      if (event.i != 0) out += " i=" + std::to_string(event.i);
      if (event.p != 0) out += " p=" + std::to_string(event.p);
      if (event.a != 0 || event.b != 0)
        out += " " + std::to_string(event.a) + "<->" + std::to_string(event.b);
      if (!event.note.empty()) out += " " + event.note;
      out += "\n";
    }
  }
  return out;
}

}  // namespace blockcc
