// Acceptance suite: runs every criterion at reference scale and prints one
// pass/fail line per criterion. Exit status is nonzero if any fail.

#include <cstdio>
#include <iostream>

#include "haareig/validation.hpp"

int main(int argc, char** argv) {
  haareig::SuiteScale scale;
  scale.workers = 4;
  if (argc > 1) scale.workers = std::max(1, std::atoi(argv[1]));
  if (argc > 2) scale.seed = std::strtoull(argv[2], nullptr, 10);

  const std::vector<haareig::CriterionResult> results =
      haareig::run_suite(scale);
  const bool ok = haareig::print_report(std::cout, results);
  std::cout << (ok ? "acceptance: all criteria passed\n"
                   : "acceptance: FAILURES present\n");
  return ok ? 0 : 1;
}
