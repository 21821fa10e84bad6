#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fqt {

struct CheckResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Invariant suites behind `verify --suite ...`.  Deterministic for a fixed seed.
std::vector<CheckResult> run_suite_exact(std::uint64_t seed);
std::vector<CheckResult> run_suite_characters(std::uint64_t seed);
std::vector<CheckResult> run_suite_variance(std::uint64_t seed);
std::vector<CheckResult> run_suite_asymptotics(std::uint64_t seed);
std::vector<CheckResult> run_suite_all(std::uint64_t seed);

// The acceptance gate: one result per numbered criterion.
std::vector<CheckResult> run_acceptance(std::uint64_t seed);

}  // namespace fqt
