#include "qshuffle/basis.hpp"

#include <algorithm>

namespace qshuffle {

std::vector<Word> words_up_to_length(const std::vector<Letter>& pool,
                                     int max_len, int min_len) {
  std::vector<Word> out;
  std::vector<Letter> current;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (static_cast<int>(current.size()) >= min_len)
      out.push_back(Word(current));
    if (remaining == 0) return;
    for (const Letter& l : pool) {
      current.push_back(l);
      self(self, remaining - 1);
      current.pop_back();
    }
  };
  if (max_len < min_len) return out;
  rec(rec, max_len);
  std::stable_sort(out.begin(), out.end(),
                   [](const Word& a, const Word& b) {
                     return a.length() < b.length();
                   });
  return out;
}

std::vector<Word> words_of_degree(const Alphabet& alphabet, int degree) {
  std::vector<Word> out;
  if (degree < 0) return out;
  if (degree == 0) {
    out.push_back(Word::empty());
    return out;
  }
  std::vector<Letter> current;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(Word(current));
      return;
    }
    for (int d = 1; d <= remaining; ++d) {
      for (const Letter& l : alphabet.degree_slice(d)) {
        current.push_back(l);
        self(self, remaining - d);
        current.pop_back();
      }
    }
  };
  rec(rec, degree);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> words_up_to_degree(const Alphabet& alphabet, int bound) {
  std::vector<Word> out;
  for (int d = 0; d <= bound; ++d) {
    auto slice = words_of_degree(alphabet, d);
    out.insert(out.end(), slice.begin(), slice.end());
  }
  return out;
}

}  // namespace qshuffle
