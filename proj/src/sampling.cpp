#include "qshuffle/sampling.hpp"

#include <algorithm>
#include <cassert>

namespace qshuffle {

Word random_word(std::mt19937_64& rng, const std::vector<Letter>& pool,
                 int max_len) {
  assert(!pool.empty());
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int len = len_dist(rng);
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) letters.push_back(pool[pick(rng)]);
  return Word(std::move(letters));
}

Element random_element(std::mt19937_64& rng, const std::vector<Letter>& pool,
                       const SampleOptions& options) {
  std::uniform_int_distribution<int> term_dist(0, options.max_terms);
  std::uniform_int_distribution<long> coeff_dist(-options.coeff_bound,
                                                 options.coeff_bound);
  std::uniform_int_distribution<long> den_dist(1, options.coeff_bound);
  Element out;
  int terms = term_dist(rng);
  for (int i = 0; i < terms; ++i) {
    long num = coeff_dist(rng);
    if (num == 0) num = 1;
    out.add_term(random_word(rng, pool, options.max_len),
                 rational(num, den_dist(rng)));
  }
  return out;
}

std::string random_bytes(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> byte_dist(0, 255);
  std::size_t len = len_dist(rng);
  std::string out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(static_cast<char>(byte_dist(rng)));
  return out;
}

std::vector<std::size_t> sample_indices(std::mt19937_64& rng, std::size_t n,
                                        std::size_t k) {
  if (k >= n) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  // partial Fisher-Yates over an index array
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(idx[i], idx[pick(rng)]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace qshuffle
