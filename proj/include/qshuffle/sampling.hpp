#pragma once
#include <random>
#include <string>
#include <vector>

#include "qshuffle/element.hpp"
#include "qshuffle/letter.hpp"

namespace qshuffle {

// Deterministic generators for property tests; every draw goes through the
// supplied engine so a fixed seed reproduces the run exactly.

Word random_word(std::mt19937_64& rng, const std::vector<Letter>& pool,
                 int max_len);

struct SampleOptions {
  int max_len = 5;
  int max_terms = 5;
  long coeff_bound = 9;  // numerators and denominators drawn from [-b, b]\{0}
};

Element random_element(std::mt19937_64& rng, const std::vector<Letter>& pool,
                       const SampleOptions& options);

std::string random_bytes(std::mt19937_64& rng, std::size_t max_len);

// Random index subset of size k, ascending; used to subsample pair grids.
std::vector<std::size_t> sample_indices(std::mt19937_64& rng, std::size_t n,
                                        std::size_t k);

}  // namespace qshuffle
