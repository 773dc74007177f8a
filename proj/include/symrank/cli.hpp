#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symrank::cli {

enum ExitCode : int { ok = 0, usage = 1, not_covered = 2, internal = 3 };

struct Request {
  std::string command;
  std::string form;                   // inline form text
  std::optional<std::string> batch;   // path with one form per line
  bool json = false;
  std::uint64_t seed = 0;
  int precision = 128;
  double tol = 1e-8;
  std::optional<std::pair<int, int>> split;
  int n = -1, d = -1, b = -1;
};

struct Response {
  std::string output;  // complete stdout text, newline terminated
  int exit_code = ok;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {"rank",          "border-rank",    "decompose",
                                                 "classify",      "catalecticant",  "possible-ranks",
                                                 "oracle-verify", "derive-aronhold"};
  return names;
}

/// Runs one request. Never throws: failures become error documents with the
/// matching exit code.
Response execute(const Request& request);

/// Parses "i:j".
std::pair<int, int> parse_split(const std::string& text);

/// Command line front end; returns the process exit code.
int run(int argc, char** argv);

}  // namespace symrank::cli
