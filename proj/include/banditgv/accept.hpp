#pragma once

#include <string>
#include <vector>

namespace banditgv {

struct criterion_result {
  int id = 0;
  bool pass = false;
  std::string detail;
};

// Criteria are numbered 1..11.
criterion_result run_criterion(int id);

// Runs the requested criteria (all when the list is empty), printing one
// PASS/FAIL line per criterion; returns the number of failures.
int run_acceptance(const std::vector<int>& only);

}  // namespace banditgv
