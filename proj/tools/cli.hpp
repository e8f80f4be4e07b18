#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace empathy::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2 };

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  // Decides the default --format: table on a terminal, machine otherwise.
  bool terminal = false;
};

// `args` excludes the program name.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace empathy::cli
