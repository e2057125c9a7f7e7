#pragma once

// Minimal subprocess capture for the CLI tests: run a command line, return
// its exit code and standard output. Diagnostics stay on our stderr.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

inline CommandResult run_command(const std::string& command) {
  std::string path =
      "/tmp/wsinf_cli_out_" + std::to_string(::getpid()) + ".txt";
  // Subshell so that redirections inside `command` (e.g. 2>&1 >/dev/null
  // to capture stderr) resolve against the capture file.
  std::string full = "( " + command + " ) > " + path;
  int status = std::system(full.c_str());
  CommandResult result;
  if (status == -1) {
    result.exit_code = -1;
  } else if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  } else {
    result.exit_code = 128;
  }
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.out = buffer.str();
  std::remove(path.c_str());
  return result;
}
