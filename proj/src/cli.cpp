#include "blockcc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "blockcc/decompose.hpp"
#include "blockcc/generate.hpp"
#include "blockcc/io.hpp"
#include "blockcc/oracle.hpp"
#include "blockcc/version.hpp"

namespace blockcc {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

bool looks_dense(const std::string& text) {
  bool any = false;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token != "0" && token != "1") return false;
    any = true;
  }
  return any;
}

InputFormat detect_format(const std::string& path, const std::string& text) {
  if (path != "-") {
    const auto dot = path.rfind('.');
    if (dot != std::string::npos) {
      const std::string ext = path.substr(dot + 1);
      if (ext == "mtx" || ext == "mm") return InputFormat::mtx;
      if (ext == "edges" || ext == "el") return InputFormat::edges;
      if (ext == "dense") return InputFormat::dense;
    }
  }
  if (text.rfind("%%MatrixMarket", 0) == 0) return InputFormat::mtx;
  if (looks_dense(text)) return InputFormat::dense;
  return InputFormat::edges;
}

AdjacencyMatrix load_matrix(const CliConfig& cfg, std::istream& in) {
  const std::string text = read_input(cfg.input, in);
  InputFormat format = cfg.format;
  if (format == InputFormat::auto_detect) format = detect_format(cfg.input, text);
  switch (format) {
    case InputFormat::mtx:
      return parse_matrix_market(text);
    case InputFormat::dense: {
      RawMatrix raw = parse_dense_raw(text);
      if (cfg.symmetrize) raw = symmetrized(std::move(raw));
      return validate_adjacency(raw);
    }
    case InputFormat::edges:
    default:
      return parse_edge_list(text);
  }
}

std::vector<std::vector<std::size_t>> report_partition(const ConnectivityReport& report) {
  return normalize_partition(report.components);
}

int cmd_analyze(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const AdjacencyMatrix m = load_matrix(cfg, in);
  const ConnectivityReport report = decompose(m, {.record_trace = cfg.trace});
  const ReportDocument doc = make_report_document(report, cfg.input, m.edge_count(), cfg.trace);
  out << (cfg.output == OutputMode::json ? emit_report_json(doc) : emit_report_text(doc));
  return report.is_connected ? 0 : 1;
}

int cmd_permute(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const AdjacencyMatrix m = load_matrix(cfg, in);
  const ConnectivityReport report = decompose(m);
  if (cfg.output == OutputMode::json) {
    nlohmann::ordered_json j;
    j["n"] = m.size();
    auto rows = nlohmann::ordered_json::array();
    const std::string dense = emit_dense(report.permuted_matrix);
    std::istringstream lines(dense);
    std::string line;
    while (std::getline(lines, line)) rows.push_back(line);
    j["matrix"] = std::move(rows);
    auto label_at = nlohmann::ordered_json::array();
    for (const std::size_t v : report.permutation.labels()) label_at.push_back(v + 1);
    j["permutation"]["label_at"] = std::move(label_at);
    out << j.dump(2) << "\n";
  } else {
    out << emit_dense(report.permuted_matrix);
    out << "\nlabels:";
    for (const std::size_t v : report.permutation.labels()) out << ' ' << (v + 1);
    out << "\n";
  }
  return 0;
}

int cmd_verify(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const AdjacencyMatrix m = load_matrix(cfg, in);
  const ConnectivityReport report = decompose(m);
  const OracleMethod method =
      cfg.oracle == "bfs" ? OracleMethod::breadth_first : OracleMethod::union_find;
  const PartitionOracleResult truth = oracle_components(m, method);
  if (report_partition(report) == truth.partition &&
      report.num_components == truth.num_components) {
    out << "OK: " << report.num_components << " component"
        << (report.num_components == 1 ? "" : "s") << ", partitions agree\n";
    return 0;
  }
  err << "MISMATCH: decomposition found " << report.num_components << " components, oracle found "
      << truth.num_components << "\n";
  return 1;
}

int cmd_generate(const GraphSpec& spec, const std::string& out_path, InputFormat format,
                 std::ostream& out, std::ostream& err) {
  const AdjacencyMatrix m = generate(spec);
  std::string text;
  switch (format == InputFormat::auto_detect ? InputFormat::edges : format) {
    case InputFormat::mtx:
      text = emit_matrix_market(m);
      break;
    case InputFormat::dense:
      text = emit_dense(m);
      break;
    default:
      text = emit_edge_list(m);
      break;
  }
  if (out_path.empty() || out_path == "-") {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
    file << text;
  }
  return 0;
}

double time_ms(const std::function<void()>& body, unsigned repeat) {
  double best = 0.0;
  for (unsigned run = 0; run < std::max(repeat, 1u); ++run) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    if (run == 0 || ms < best) best = ms;
  }
  return best;
}

GraphSpec bench_spec(const std::string& family, std::size_t n, double p, std::uint64_t seed) {
  GraphSpec spec;
  spec.family = parse_family(family);
  spec.seed = seed;
  if (spec.family == GraphFamily::planted_components) {
    // four near-equal blocks
    const std::size_t blocks = 4;
    for (std::size_t b = 0; b < blocks; ++b)
      spec.sizes.push_back(std::max<std::size_t>(1, n / blocks + (b < n % blocks ? 1 : 0)));
    spec.edge_probability = p;
  } else {
    spec.n = n;
    spec.edge_probability = p;
  }
  return spec;
}

int cmd_bench(const std::vector<std::size_t>& n_list, std::vector<std::string> families, double p,
              std::uint64_t seed, unsigned repeat, std::ostream& out) {
  std::vector<std::size_t> sizes = n_list;
  std::sort(sizes.begin(), sizes.end());
  std::sort(families.begin(), families.end());

  out << "n,family,algd_ms,oracle_ms,swaps\n";
  for (const std::size_t n : sizes) {
    for (const std::string& family : families) {
      const GraphSpec spec = bench_spec(family, n, p, seed + n);
      const AdjacencyMatrix m = generate(spec);
      ConnectivityReport report;
      const double algd_ms = time_ms([&] { report = decompose(m); }, repeat);
      PartitionOracleResult truth;
      const double oracle_ms =
          time_ms([&] { truth = oracle_components(m, OracleMethod::union_find); }, repeat);
      if (normalize_partition(report.components) != truth.partition) {
        out << std::flush;
        throw Error(ErrorKind::InvalidSpec, "bench self-check failed: partitions disagree");
      }
      out << n << ',' << family << ',' << std::fixed << std::setprecision(3) << algd_ms << ','
          << oracle_ms << ',' << report.swap_count << "\n";
      out << std::defaultfloat;
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CliConfig cfg;

  CLI::App app{"block-diagonal connected-component decomposition of adjacency matrices"};
  app.set_version_flag("--version", version_string);
  app.require_subcommand(1);

  const std::map<std::string, InputFormat> format_names{{"auto", InputFormat::auto_detect},
                                                        {"edges", InputFormat::edges},
                                                        {"mtx", InputFormat::mtx},
                                                        {"dense", InputFormat::dense}};
  const std::map<std::string, OutputMode> output_names{{"text", OutputMode::text},
                                                       {"json", OutputMode::json}};

  auto add_input_options = [&](CLI::App* cmd) {
    cmd->add_option("input", cfg.input, "input file, or '-' for stdin")->capture_default_str();
    cmd->add_option("-f,--format", cfg.format, "input format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
        ->default_str("auto");
    cmd->add_flag("--symmetrize", cfg.symmetrize,
                  "repair asymmetric dense input by OR-ing with its transpose");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "decide connectivity and list components");
  add_input_options(analyze);
  analyze->add_option("-o,--output", cfg.output, "output mode")
      ->transform(CLI::CheckedTransformer(output_names, CLI::ignore_case))
      ->default_str("text");
  analyze->add_flag("--trace", cfg.trace, "include the step-by-step decomposition trace");

  CLI::App* permute = app.add_subcommand("permute", "emit the permuted matrix and permutation");
  add_input_options(permute);
  permute->add_option("-o,--output", cfg.output, "output mode")
      ->transform(CLI::CheckedTransformer(output_names, CLI::ignore_case))
      ->default_str("text");

  CLI::App* verify =
      app.add_subcommand("verify", "cross-check the decomposition against an oracle");
  add_input_options(verify);
  verify->add_option("--oracle", cfg.oracle, "oracle method")
      ->check(CLI::IsMember({"uf", "bfs"}))
      ->capture_default_str();

  CLI::App* generate_cmd = app.add_subcommand("generate", "synthesize a graph");
  std::string family;
  std::size_t gen_n = 0;
  std::vector<std::size_t> gen_sizes;
  double gen_p = 0.0;
  std::string recipe_path;
  std::string gen_out_path;
  InputFormat gen_format = InputFormat::edges;
  generate_cmd->add_option("--family", family,
                           "planted|erdos_renyi|path|cycle|complete|star|null");
  generate_cmd->add_option("-n,--n", gen_n, "vertex count");
  generate_cmd->add_option("--sizes", gen_sizes, "planted block sizes, e.g. --sizes 3 2")
      ->delimiter(',');
  generate_cmd->add_option("-p,--density", gen_p, "edge probability / extra-edge density");
  generate_cmd->add_option("--seed", cfg.seed, "generator seed")->capture_default_str();
  generate_cmd->add_option("--recipe", recipe_path, "JSON recipe file (overrides flags)");
  generate_cmd->add_option("-f,--format", gen_format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, InputFormat>{{"edges", InputFormat::edges},
                                             {"mtx", InputFormat::mtx},
                                             {"dense", InputFormat::dense}},
          CLI::ignore_case))
      ->default_str("edges");
  generate_cmd->add_option("--out", gen_out_path, "output file (default stdout)");

  CLI::App* bench = app.add_subcommand("bench", "time the decomposition against the oracle");
  std::vector<std::size_t> bench_n{100, 200, 400, 800};
  std::vector<std::string> bench_families{"complete", "erdos_renyi", "planted", "path"};
  double bench_p = 0.25;
  unsigned bench_repeat = 1;
  bench->add_option("--n-list", bench_n, "graph sizes")->delimiter(',')->capture_default_str();
  bench->add_option("--families", bench_families, "graph families")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("-p,--density", bench_p, "edge probability")->capture_default_str();
  bench->add_option("--seed", cfg.seed, "generator seed")->capture_default_str();
  bench->add_option("--repeat", bench_repeat, "timing runs per row (best kept)")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << version_string << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) {
      cfg.subcommand = "analyze";
      return cmd_analyze(cfg, in, out);
    }
    if (permute->parsed()) {
      cfg.subcommand = "permute";
      return cmd_permute(cfg, in, out);
    }
    if (verify->parsed()) {
      cfg.subcommand = "verify";
      return cmd_verify(cfg, in, out, err);
    }
    if (generate_cmd->parsed()) {
      cfg.subcommand = "generate";
      GraphSpec spec;
      if (!recipe_path.empty()) {
        spec = graph_spec_from_json(read_input(recipe_path, in));
      } else {
        if (family.empty()) {
          err << "error: generate needs --family or --recipe\n";
          return 2;
        }
        spec.family = parse_family(family);
        spec.n = gen_n;
        spec.sizes = gen_sizes;
        spec.edge_probability = gen_p;
        spec.seed = cfg.seed;
        if (spec.family == GraphFamily::planted_components && spec.sizes.empty()) {
          err << "error: planted graphs need --sizes\n";
          return 2;
        }
      }
      return cmd_generate(spec, gen_out_path, gen_format, out, err);
    }
    if (bench->parsed()) {
      cfg.subcommand = "bench";
      return cmd_bench(bench_n, bench_families, bench_p, cfg.seed, bench_repeat, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace blockcc
