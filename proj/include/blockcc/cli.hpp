#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace blockcc {

enum class InputFormat { auto_detect, edges, mtx, dense };
enum class OutputMode { text, json };

struct CliConfig {
  std::string subcommand;
  std::string input = "-";  // '-' reads stdin
  InputFormat format = InputFormat::auto_detect;
  OutputMode output = OutputMode::text;
  bool trace = false;
  bool symmetrize = false;
  std::uint64_t seed = 0;
  std::string oracle = "uf";  // uf | bfs
};

/// Runs the command line tool in-process. Exit codes: analyze returns 0 when
/// the graph is connected and 1 when disconnected; verify returns 0 on
/// agreement and 1 on mismatch; every command returns 2 on bad input or
/// usage.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace blockcc
