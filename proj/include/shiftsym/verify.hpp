#pragma once

#include "shiftsym/random_elements.hpp"

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace shiftsym {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;  // counterexample or error message on failure
};

struct VerifyOptions {
  int max_weight = 10;
  int order = kDefaultOrder;
  std::uint64_t seed = kDefaultSeed;
  int samples = 8;  // random inputs per property
};

// Runs every property suite; results are in a fixed order.
std::vector<SuiteResult> run_verification(const VerifyOptions& options,
                                          const std::function<void(const SuiteResult&)>& on_result = {});

}  // namespace shiftsym
