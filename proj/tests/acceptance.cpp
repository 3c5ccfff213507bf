#include <cstdlib>
#include <iostream>
#include <string>

#include "contraction/selftest.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = contraction::selftest::kDefaultSeed;
  if (argc > 1) seed = std::stoull(argv[1]);
  bool ok = true;
  for (int id = 1; id <= contraction::selftest::kCriteria; ++id) {
    auto r = contraction::selftest::run_criterion(id, seed);
    std::cout << contraction::selftest::format_line(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
