#pragma once
#include <vector>

#include "qshuffle/alphabet.hpp"
#include "qshuffle/word.hpp"

namespace qshuffle {

// All words over the given letter pool with length in [min_len, max_len],
// ordered by length and then by pool position, base-|pool| counting.
std::vector<Word> words_up_to_length(const std::vector<Letter>& pool,
                                     int max_len, int min_len = 0);

// Unit-free words over the alphabet with the exact total degree, canonical
// order within the degree.
std::vector<Word> words_of_degree(const Alphabet& alphabet, int degree);

// Unit-free words of total degree <= bound, ascending degree. Degree zero
// contributes the empty word.
std::vector<Word> words_up_to_degree(const Alphabet& alphabet, int bound);

}  // namespace qshuffle
