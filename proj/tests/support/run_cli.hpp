#pragma once

// Runs the CLI binary and captures exit code plus combined output.

#include <array>
#include <cstdio>
#include <string>
#include <vector>

namespace testsupport {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

inline CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(ELFAROL_CLI_PATH) + " " + args + " 2>&1";
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) {
    result.output += buf.data();
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

struct SweepRow {
  double param_value = 0.0;
  double ne = 0.0;
  double med = 0.0;
  double opt = 0.0;
  double mv = 0.0;
  double ev = 0.0;
  double x_star = 0.0;
  double p = 0.0;
  double y_star = 0.0;
  int degenerate = 0;
};

inline std::vector<SweepRow> parse_sweep_csv(const std::string& text) {
  std::vector<SweepRow> rows;
  std::size_t pos = text.find('\n');  // skip the header line
  while (pos != std::string::npos && pos + 1 < text.size()) {
    const std::size_t end = text.find('\n', pos + 1);
    const std::string line = text.substr(pos + 1, end - pos - 1);
    pos = end;
    if (line.empty()) continue;
    SweepRow row;
    double* fields[] = {&row.param_value, &row.ne, &row.med, &row.opt, &row.mv,
                        &row.ev, &row.x_star, &row.p, &row.y_star};
    std::size_t start = 0;
    for (double* f : fields) {
      const std::size_t comma = line.find(',', start);
      *f = std::stod(line.substr(start, comma - start));
      start = comma + 1;
    }
    row.degenerate = std::stoi(line.substr(start));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace testsupport
