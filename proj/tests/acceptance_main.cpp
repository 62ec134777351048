#include <cstdlib>
#include <iostream>
#include <string>

#include "posetkit/acceptance.hpp"

// One line per criterion; exit status is nonzero if any criterion fails.
int main(int argc, char** argv) {
  posetkit::AcceptanceOptions options;
  if (argc > 1) options.seed = std::stoull(argv[1]);
  bool ok = true;
  for (int id = 1; id <= 11; ++id) {
    const auto r = posetkit::run_criterion(id, options);
    std::cout << posetkit::format_criterion(r) << "  [" << r.seconds << " s]" << std::endl;
    ok = ok && r.passed;
  }
  std::cout << (ok ? "acceptance: all 11 criteria pass" : "acceptance: FAILED") << std::endl;
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
