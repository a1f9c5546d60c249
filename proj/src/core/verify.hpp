#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ian {

struct SuiteResult {
  std::string name;
  long cases = 0;
  long passed = 0;
  long failed = 0;
  std::string first_failure;  // empty when clean
};

struct VerifyReport {
  int rank = 0;
  int truncation = 0;
  long cases = 0;
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  bool all_passed() const;
  std::string table() const;
  std::string to_json() const;
};

// Runs every invariant suite at the given size. Each suite draws from its
// own deterministic stream, so a fixed seed reproduces bit for bit.
// Requires rank >= 2 and truncation >= 3; `cases` scales the sampled suites.
VerifyReport run_verification(int rank, int truncation, long cases, std::uint64_t seed);

}  // namespace ian
