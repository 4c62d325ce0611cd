#include <iostream>

#include "ncpart/acceptance.hpp"

int main() {
  const auto results = ncpart::run_acceptance(std::cout);
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed") << "\n";
  return failed == 0 ? 0 : 1;
}
