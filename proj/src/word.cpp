#include "qshuffle/word.hpp"

#include <cassert>

namespace qshuffle {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const Letter& l : letters_) degree_ += l.degree();
}

const Word& Word::empty() {
  static const Word w;
  return w;
}

bool Word::contains_unit() const {
  for (const Letter& l : letters_)
    if (l.is_unit()) return true;
  return false;
}

Word Word::prepended(const Letter& head) const {
  std::vector<Letter> ls;
  ls.reserve(letters_.size() + 1);
  ls.push_back(head);
  ls.insert(ls.end(), letters_.begin(), letters_.end());
  return Word(std::move(ls));
}

Word Word::tail() const {
  assert(!letters_.empty());
  return Word(std::vector<Letter>(letters_.begin() + 1, letters_.end()));
}

Word Word::concat(const Word& other) const {
  std::vector<Letter> ls = letters_;
  ls.insert(ls.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(ls));
}

Word Word::prefix(std::size_t n) const {
  assert(n <= letters_.size());
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + n));
}

Word Word::suffix_from(std::size_t n) const {
  assert(n <= letters_.size());
  return Word(std::vector<Letter>(letters_.begin() + n, letters_.end()));
}

bool Word::operator<(const Word& other) const {
  if (degree_ != other.degree_) return degree_ < other.degree_;
  if (letters_.size() != other.letters_.size())
    return letters_.size() < other.letters_.size();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] == other.letters_[i]) continue;
    return letters_[i] < other.letters_[i];
  }
  return false;
}

std::string to_string(const Word& w) {
  if (w.is_empty()) return "[e]";
  std::string out = "[";
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out += ',';
    out += w.at(i).name();
  }
  out += ']';
  return out;
}

}  // namespace qshuffle
