#pragma once
#include <cstdint>
#include <string>

#include "qshuffle/alphabet.hpp"
#include "qshuffle/rational.hpp"
#include "qshuffle/report.hpp"

namespace qshuffle {

struct RunConfig {
  Alphabet alphabet = Alphabet::make_stuffle();
  Rational lambda = 1;
  int max_degree = 5;
  int max_length = 4;
  std::uint64_t seed = 42;
  // adds a deliberately wrong check (a weight mismatch) that must fail
  bool negative_control = false;
  // exhaustive pair grids larger than this are subsampled deterministically
  std::size_t pair_budget = 10000;
};

struct VerifyResult {
  CheckReport report;
  std::string text;  // format_report of the rows, stable across runs
  bool all_pass = false;
};

// Runs every identity and structure check over windows derived from the
// config. Deterministic: same config, byte-identical text.
VerifyResult run_verification_suite(const RunConfig& config);

}  // namespace qshuffle
