#pragma once

// Small helper for driving the CLI binary from tests: runs a command with
// stdout/stderr captured to files in a per-process temp directory.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace testutil {

struct CommandResult {
  int exit_code;
  std::string out;
  std::string err;
};

inline std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("deltabound_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline CommandResult run_command(const std::string& cmd) {
  static int counter = 0;
  const auto dir = temp_dir();
  const auto out_path = dir / ("out" + std::to_string(counter) + ".txt");
  const auto err_path = dir / ("err" + std::to_string(counter) + ".txt");
  ++counter;

  const std::string full =
      cmd + " > " + out_path.string() + " 2> " + err_path.string();
  const int status = std::system(full.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, read_file(out_path), read_file(err_path)};
}

}  // namespace testutil
