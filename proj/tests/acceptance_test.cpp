#include <iostream>

#include "pseudofield/selftest.hpp"

// Runs every acceptance criterion and prints one pass/fail line each.
int main() {
  pseudofield::SelftestReport report = pseudofield::run_selftest_full();
  std::cout << report.text();
  return report.all_pass() ? 0 : 1;
}
