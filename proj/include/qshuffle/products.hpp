#pragma once
#include <map>
#include <optional>
#include <vector>

#include "qshuffle/alphabet.hpp"
#include "qshuffle/element.hpp"

namespace qshuffle {

enum class Deck : unsigned char { left, right };

// An (m,n)-shuffle encoded by its deck sequence: slot j holds left when the
// j-th output position comes from the left word. Both deck orders are
// preserved, so the sequence determines the permutation.
struct ShufflePattern {
  std::vector<Deck> slots;

  int left_count() const;
  int right_count() const;
  // 1-based positions k with slot k from the left deck and k+1 from the
  // right; such positions are never adjacent, so merge choices are free.
  std::vector<int> admissible_pairs() const;
};

// A shuffle together with a chosen subset of its admissible pairs to merge.
struct MixableShuffle {
  ShufflePattern pattern;
  std::vector<int> merges;  // ascending subset of pattern.admissible_pairs()
};

// Lexicographic in the deck sequence with left < right; C(m+n, m) patterns.
std::vector<ShufflePattern> enumerate_shuffles(int m, int n);

// Every (pattern, merge-subset) pair; subsets in binary-counter order per
// pattern, low admissible position = low bit.
std::vector<MixableShuffle> enumerate_mixable_shuffles(int m, int n);

Word apply_shuffle(const ShufflePattern& pattern, const Word& a, const Word& b);

// nullopt when some merged pair has a zero bracket, killing the term
std::optional<Word> apply_mixable_shuffle(const MixableShuffle& ms,
                                          const Word& a, const Word& b,
                                          const Alphabet& alphabet);

// Word-level products. The explicit forms sum over the enumerations above;
// the recursive forms split on head letters. Both are exposed so they can be
// checked against each other.
Element shuffle_explicit(const Word& a, const Word& b);
Element shuffle_recursive(const Word& a, const Word& b);
Element quasi_shuffle(const Word& a, const Word& b, const Alphabet& alphabet);
Element mixable_shuffle_explicit(const Word& a, const Word& b,
                                 const Rational& lambda,
                                 const Alphabet& alphabet);
Element mixable_shuffle_recursive(const Word& a, const Word& b,
                                  const Rational& lambda,
                                  const Alphabet& alphabet);

// Coefficient of each weight power in the mixable product, keyed by the
// number of merges performed.
std::map<int, Element> mixable_shuffle_lambda_graded(const Word& a,
                                                     const Word& b,
                                                     const Alphabet& alphabet);

// Bilinear extensions.
Element shuffle(const Element& a, const Element& b);
Element quasi_shuffle(const Element& a, const Element& b,
                      const Alphabet& alphabet);
Element mixable_shuffle(const Element& a, const Element& b,
                        const Rational& lambda, const Alphabet& alphabet);

// Product on words of length >= 1 whose first slot carries the coefficient
// algebra: heads multiply, tails mix. Rejects empty words.
Element augmented_product(const Element& a, const Element& b,
                          const Rational& lambda, const Alphabet& alphabet);

// Concatenation product (the convolution algebra multiplication uses it in
// tests; exposed for the shell as well).
Element concat_product(const Element& a, const Element& b);

}  // namespace qshuffle
