#pragma once

#include <string>
#include <vector>

#include "cornerlab/optcore.hpp"

namespace cornerlab::cli {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Property suites for every module. The seed in cfg is ignored: runs use 42.
std::vector<SelftestCheck> run_selftest(SolverConfig cfg);

}  // namespace cornerlab::cli
