#pragma once

// Acceptance criteria 1-11, evaluated on the builtin catalog with fixed seeds.
// Shared by the relhom_acceptance binary and `relhom selftest`.

#include <string>
#include <vector>

namespace relhom::acceptance {

struct Result {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriteria = 11;

/// Throws std::out_of_range for ids outside 1..kCriteria. Exceptions raised by
/// the engine are caught and reported as failures.
Result run_one(int id);
std::vector<Result> run_all();
std::string format(const Result& r);

}  // namespace relhom::acceptance
