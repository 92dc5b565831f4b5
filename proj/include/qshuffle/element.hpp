#pragma once
#include <map>
#include <string>

#include "qshuffle/rational.hpp"
#include "qshuffle/word.hpp"

namespace qshuffle {

class Alphabet;

// Finite rational linear combination of words in canonical sparse form: no
// zero coefficients, terms ordered by (degree, length, lexicographic names).
class Element {
public:
  Element() = default;
  static Element from_word(const Word& w, const Rational& coeff = 1);
  static const Element& zero();
  static const Element& one();  // empty word with coefficient 1

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, Rational>& terms() const { return terms_; }
  Rational coefficient(const Word& w) const;

  void add_term(const Word& w, const Rational& coeff);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator-() const;
  Element scaled(const Rational& scalar) const;

  bool operator==(const Element& other) const = default;

private:
  std::map<Word, Rational> terms_;
};

Element operator*(const Rational& scalar, const Element& e);

// pushes a letter onto the front of every word
Element prepended(const Letter& head, const Element& e);

// Text form. Terms in canonical order joined by " + "; each term is
// "<coeff>*[letters]" with "1*" omitted, "p/q" in lowest terms with a
// positive denominator, "[e]" for the empty word, the unit letter printed
// "1", and the zero element printed "0".
std::string canonical_serialize(const Element& e);

// Inverse of canonical_serialize, tolerant of whitespace; letter names are
// resolved (and degree-checked) against the alphabet.
Element parse_element(const std::string& text, const Alphabet& alphabet);

}  // namespace qshuffle
