#pragma once
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "qshuffle/alphabet.hpp"
#include "qshuffle/element.hpp"
#include "qshuffle/report.hpp"

namespace qshuffle {

// Rational combination of word pairs; the two legs of the coproduct.
class TensorSquareElement {
public:
  TensorSquareElement() = default;
  static TensorSquareElement from_pair(const Word& left, const Word& right,
                                       const Rational& coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<Word, Word>, Rational>& terms() const {
    return terms_;
  }

  void add_term(const Word& left, const Word& right, const Rational& coeff);
  TensorSquareElement& operator+=(const TensorSquareElement& other);
  TensorSquareElement operator+(const TensorSquareElement& other) const;
  TensorSquareElement operator-() const;
  TensorSquareElement scaled(const Rational& scalar) const;
  bool operator==(const TensorSquareElement& other) const = default;

private:
  std::map<std::pair<Word, Word>, Rational> terms_;
};

// "[u](x)[v]" terms with the coefficient conventions of canonical_serialize.
std::string canonical_serialize(const TensorSquareElement& e);

// Deconcatenation: every split of the word into a prefix and a suffix.
TensorSquareElement coproduct(const Word& w);
TensorSquareElement coproduct(const Element& e);

// Coefficient of the empty word.
Rational counit(const Element& e);

enum class HopfProduct { quasi_shuffle, mixable };

// Word-bilinear multiplication for the chosen product; lambda is ignored by
// the quasi-shuffle case.
Element hopf_multiply(HopfProduct kind, const Element& a, const Element& b,
                      const Rational& lambda, const Alphabet& alphabet);

// Inverse of the identity under convolution, computed by the connected-
// filtration recursion S(w) = -w - sum S(u)v over proper splits uv = w.
// The convolution checks below certify the result.
Element antipode(const Element& e, HopfProduct kind, const Rational& lambda,
                 const Alphabet& alphabet);

using HopfLinearMap = std::function<Element(const Element&)>;

// (f * g)(e) = multiply(f(left), g(right)) summed over coproduct terms.
Element convolve(const HopfLinearMap& f, const HopfLinearMap& g,
                 const Element& e, HopfProduct kind, const Rational& lambda,
                 const Alphabet& alphabet);

using CoproductFn = std::function<TensorSquareElement(const Word&)>;

// Bialgebra and Hopf laws over all unit-free basis words of total degree <=
// degree_bound: coassociativity, counit laws, multiplicativity of the
// coproduct and counit, and both antipode identities. A custom coproduct can
// be injected to watch the checker catch a broken one.
CheckReport check_bialgebra(HopfProduct kind, const Rational& lambda,
                            const Alphabet& alphabet, int degree_bound,
                            const CoproductFn& delta = {});

// Number of unit-free basis words of the exact total degree.
unsigned long long graded_dimension(const Alphabet& alphabet, int degree);

}  // namespace qshuffle
