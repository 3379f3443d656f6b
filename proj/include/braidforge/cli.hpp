#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "braidforge/report.hpp"

namespace braidforge::cli {

struct RunConfig {
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 42;
  std::size_t dense_cap = braidforge::dense_cap();
  Engine engine = Engine::structured;
  bool json = false;
  bool timing = false;
};

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

/// "0.25pi", "-pi/4", "pi", or a plain decimal, in radians.
double parse_angle(std::string_view text);

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidforge::cli
