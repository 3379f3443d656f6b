#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidforge/linalg.hpp"

namespace braidforge {

/// Worst entry of a failed or near-failed comparison. Row and column are
/// 1-based basis labels; zero means "not applicable".
struct Witness {
  std::size_t row = 0;
  std::size_t col = 0;
  Complex lhs{};
  Complex rhs{};
  std::string detail;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  double max_error = 0.0;
  double tolerance = kDefaultTolerance;
  std::optional<Witness> witness;

  static CheckResult from_error(std::string name, double max_error, double tolerance,
                                std::optional<Witness> witness = std::nullopt);
};

/// Outcome of one named verification. Passes iff every check satisfies
/// max_error <= tolerance.
struct VerificationReport {
  std::string name;
  double tolerance = kDefaultTolerance;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0.0;

  bool passed() const;
  double max_error() const;
  const CheckResult* find(std::string_view check) const;
  const CheckResult* first_failure() const;
  void add(CheckResult c);
};

enum class Engine { structured, dense };

struct VerifyOptions {
  double tolerance = kDefaultTolerance;
  Engine engine = Engine::structured;
  std::size_t dense_cap = braidforge::dense_cap();
};

/// Records wall time into a report on destruction.
class ReportTimer {
 public:
  explicit ReportTimer(VerificationReport& r) : report_(r), start_(std::chrono::steady_clock::now())
  {
  }
  ~ReportTimer()
  {
    const auto d = std::chrono::steady_clock::now() - start_;
    report_.elapsed_ms = std::chrono::duration<double, std::milli>(d).count();
  }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace braidforge
