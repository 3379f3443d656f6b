#include "braidforge/report.hpp"

#include <algorithm>

namespace braidforge {

CheckResult CheckResult::from_error(std::string name, double max_error, double tolerance,
                                    std::optional<Witness> witness)
{
  CheckResult c;
  c.name = std::move(name);
  c.max_error = max_error;
  c.tolerance = tolerance;
  c.passed = max_error <= tolerance;
  if (max_error > 0.0)
    c.witness = std::move(witness);
  return c;
}

bool VerificationReport::passed() const
{
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

double VerificationReport::max_error() const
{
  double e = 0.0;
  for (const auto& c : checks)
    e = std::max(e, c.max_error);
  return e;
}

const CheckResult* VerificationReport::find(std::string_view check) const
{
  for (const auto& c : checks)
    if (c.name == check)
      return &c;
  return nullptr;
}

const CheckResult* VerificationReport::first_failure() const
{
  for (const auto& c : checks)
    if (!c.passed)
      return &c;
  return nullptr;
}

void VerificationReport::add(CheckResult c)
{
  c.tolerance = tolerance;
  c.passed = c.max_error <= tolerance;
  checks.push_back(std::move(c));
}

}  // namespace braidforge
