#pragma once

#include <string>
#include <vector>

#include "systemt/harness.hpp"

namespace systemt::harness {

struct AcceptanceConfig {
  std::uint64_t seed = 20240501;
  std::size_t terms = 500;
  std::size_t size_budget = 25;
  std::size_t trees = 200;
  std::string golden_dir;  // holds <name>.<motive>.t files; empty skips nothing, it fails criterion 9
  Execution execution = Execution::Parallel;
};

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;
  double seconds;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg);

// Golden translate output of a corpus term, as written to <name>.<motive>.t.
std::string golden_translation(const Term& t, const std::string& motive_name);

// Oracle equal to the identity on [0, n) and 0 afterwards.
Oracle identity_prefix(Nat n = 64);

}  // namespace systemt::harness
