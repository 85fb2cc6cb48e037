#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "placto/report.hpp"

namespace placto {

/// Caps shared by the verification suites.
struct SuiteOptions {
  int n = 5;            // relation indices
  int contexts = 200;   // random contexts per relation instance
  int word_length = 6;  // normal-form words
  int letter_cap = 3;   // letters of natural alphabets
  int total_cap = 3;    // matrix totals and tableau sizes
  int deg = 4;          // x-degree of Cauchy series
  int gamma = 3;        // |gamma| for operator series
  int kmax = 3;         // power sums
  int rs = 4;           // defining relation of the s-basis
  int lr_size = 6;      // |lambda| for LR oracles
  std::uint64_t seed = 1;
  std::optional<std::string> A;  // degree signature, all of size <= 2 when unset
  std::optional<std::string> B;
};

struct SuiteInfo {
  std::string name;
  std::string description;
};

std::vector<SuiteInfo> suites();
/// Runs a suite by name; throws std::out_of_range for an unknown name.
Report run_suite(const std::string& name, const SuiteOptions& opt);

/// Worker count from PLACTO_THREADS, else the hardware concurrency.
int thread_count();

}  // namespace placto
