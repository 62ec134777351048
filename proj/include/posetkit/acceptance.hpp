#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "posetkit/parallel.hpp"

namespace posetkit {

struct AcceptanceOptions {
  std::uint64_t seed = 20240611;
  std::size_t random_complemented = 200;  // population (4)
  std::size_t random_max_size = 10;
  std::size_t exhaustive_max_size = 7;
  std::size_t random_sum_combinations = 5;
  Exec exec = Exec::parallel;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string details;
  double seconds = 0;
};

/// Runs acceptance criterion `id` (1..11). Never throws: exceptions are
/// counted as failures and reported in details.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "[PASS] 4  title  (details)"
std::string format_criterion(const CriterionResult& r);

}  // namespace posetkit
