// Acceptance suite: runs every verification criterion at its pinned tolerance
// and prints one pass/fail line per criterion. Exit code 0 only if all pass.

#include <cstdio>
#include <iostream>

#include "zpfield/checks.hpp"

int main() {
  const auto results = zpf::checks::run_acceptance_checks();
  std::cout << zpf::checks::format_report(results);
  return zpf::checks::all_passed(results) ? 0 : 1;
}
