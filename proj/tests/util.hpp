#pragma once

// Shared helpers for the test binaries: file IO, subprocess capture, and the
// `# expect: <line>:<col> <Code>` annotations on the malformed fixtures.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace testutil {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

struct CmdResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

inline CmdResult run_cmd(const std::string& cmd) {
  CmdResult result;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + cmd);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0)
    result.output.append(buf, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

struct ExpectedError {
  int line = 0;
  int column = 0;
  std::string code;
};

/// Parses the `# expect: <line>:<col> <Code>` annotation that heads every
/// malformed fixture.
inline ExpectedError parse_annotation(const std::string& fixture_text) {
  const std::string prefix = "# expect: ";
  if (!fixture_text.starts_with(prefix))
    throw std::runtime_error("fixture lacks an expect annotation");
  std::string line = fixture_text.substr(
      prefix.size(), fixture_text.find('\n') - prefix.size());
  ExpectedError expected;
  std::istringstream in(line);
  char colon = 0;
  if (!(in >> expected.line >> colon >> expected.column >> expected.code) ||
      colon != ':')
    throw std::runtime_error("bad expect annotation: " + line);
  return expected;
}

inline std::vector<std::filesystem::path> list_dir(
    const std::filesystem::path& dir, const std::string& extension) {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == extension) out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testutil
