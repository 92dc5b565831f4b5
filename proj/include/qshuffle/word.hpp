#pragma once
#include <cstddef>
#include <string>
#include <vector>

#include "qshuffle/letter.hpp"

namespace qshuffle {

// An ordered tensor word over letters. The empty word represents the scalar
// basis element. Degree is the sum of letter degrees; it is cached because
// the canonical term order sorts by it first.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static const Word& empty();

  std::size_t length() const { return letters_.size(); }
  int degree() const { return degree_; }
  bool is_empty() const { return letters_.empty(); }
  bool contains_unit() const;
  const Letter& at(std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  Word prepended(const Letter& head) const;
  Word tail() const;  // drops the first letter; word must be nonempty
  Word concat(const Word& other) const;
  Word prefix(std::size_t n) const;
  Word suffix_from(std::size_t n) const;

  bool operator==(const Word& other) const = default;
  // canonical order: degree, then length, then letterwise (name, degree)
  bool operator<(const Word& other) const;

private:
  std::vector<Letter> letters_;
  int degree_ = 0;
};

// "[e]" for the empty word, otherwise "[a,b,...]" with the unit printed "1".
std::string to_string(const Word& w);

}  // namespace qshuffle
