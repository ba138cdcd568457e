// One line per acceptance criterion; exit status is nonzero if any fails.
#include <iostream>

#include "spinecheck/selftest.hpp"

int main() {
  const auto checks = spinecheck::run_selftest();
  int failed = 0;
  int n = 0;
  for (const auto& c : checks) {
    ++n;
    std::cout << (c.passed ? "PASS" : "FAIL") << "  criterion " << n << "  " << c.name << "  (" << c.detail
              << ")\n";
    failed += c.passed ? 0 : 1;
  }
  std::cout << (n - failed) << "/" << n << " acceptance criteria passed\n";
  return failed == 0 && n == 10 ? 0 : 1;
}
