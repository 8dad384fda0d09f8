#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fracml {

struct CriterionResult {
  int index;
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs the full acceptance suite, printing one pass/fail line per criterion.
std::vector<CriterionResult> run_acceptance_suite(std::ostream& log);

/// Convenience: run and return the number of failed criteria.
int acceptance_main(std::ostream& log);

}  // namespace fracml
