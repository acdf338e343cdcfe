// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
// With arguments, runs only the listed criteria.

#include <cstdlib>
#include <iostream>
#include <string>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  using namespace relhom::acceptance;
  bool ok = true;
  auto report = [&](const Result& r) {
    std::cout << format(r) << std::endl;
    ok = ok && r.passed;
  };
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) report(run_one(std::atoi(argv[i])));
  } else {
    for (int id = 1; id <= kCriteria; ++id) report(run_one(id));
  }
  return ok ? 0 : 1;
}
