#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "exactlab/rational.hpp"

namespace exactlab::cli {

enum class OutputFormat { Table, Json, Csv };

struct CliConfig {
  OutputFormat format = OutputFormat::Table;
  Rational tolerance{BigInt(1), BigInt(100'000'000)};
  int max_iter = 12;
  int base = 10;
  /// Bold table headers; callers decide from NO_COLOR and the terminal.
  bool color = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

/// args excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

}  // namespace exactlab::cli
