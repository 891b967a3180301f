#pragma once

#include <cstdio>
#include <string>
#include <utility>

namespace test_util {

struct run_result {
  int exit_code = -1;
  std::string output;  // captured stdout bytes
};

// Runs a shell command, capturing stdout; stderr passes through to the
// terminal unless redirected in the command itself.
inline run_result run_command(const std::string& command) {
  run_result result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

}  // namespace test_util
