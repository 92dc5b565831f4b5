#pragma once
#include <optional>
#include <string>
#include <vector>

#include "qshuffle/alphabet.hpp"
#include "qshuffle/element.hpp"
#include "qshuffle/report.hpp"

namespace qshuffle {

// Nonnegative index sequence; entry 0 stands for a unit slot, entry i >= 1
// for the i-th alphabet letter in the (degree, name) enumeration.
struct IndexSequence {
  std::vector<int> entries;

  std::size_t length() const { return entries.size(); }
  std::size_t zero_count() const;
  bool all_positive() const;
  bool operator==(const IndexSequence& other) const = default;
  bool operator<(const IndexSequence& other) const;
};

// "(2,0,1)"; the empty sequence prints "()".
std::string to_string(const IndexSequence& seq);

// Subsequence of nonzero entries, order preserved.
IndexSequence ssupp(const IndexSequence& seq);

Word word_from_indices(const IndexSequence& seq, const Alphabet& alphabet);

// Identity embedding of the unit-free word algebra into the augmented one;
// rejects unit letters.
Element f_tilde(const Element& e);

// Diagonal rescaling w -> lambda^length(w) * w; an algebra map from the
// weight-lambda mixable product to the weight-one product. The inverse
// needs lambda != 0.
Element g_rescale(const Element& e, const Rational& lambda);
Element g_rescale_inverse(const Element& e, const Rational& lambda);

// Sum of lambda^i * binom(len(I), i) * (unit^(m-i) shuffled with y_I) for
// i = 0..m: the closed form the mixable product of a unit power with a
// unit-free word expands to. Entries of I must be positive.
Element unit_power_shuffle_sum(int m, const IndexSequence& seq,
                               const Rational& lambda,
                               const Alphabet& alphabet);

// Mixable product of the unit-power word with y_I, for checking against the
// closed form above.
Element unit_power_product(int m, const IndexSequence& seq,
                           const Rational& lambda, const Alphabet& alphabet);

// Sum of y_J over all J of the same length whose nonzero subsequence equals
// that of seq; binom(length, zero_count) terms, each with coefficient 1.
Element one_shuffled(const IndexSequence& seq, const Alphabet& alphabet);

// All strictly positive sequences with entries in 1..num_letters and length
// in [0, max_len], ordered by length then lexicographically.
std::vector<IndexSequence> positive_sequences(int num_letters, int max_len);

struct RankReport {
  std::size_t input_count = 0;
  std::size_t rank = 0;
  bool independent = false;
  // coefficients of a vanishing combination when dependent, first nonzero 1
  std::optional<std::vector<Rational>> dependency;
};

RankReport check_linear_independence(const std::vector<Element>& elements);

// Coefficients expressing target in the span of basis, or nullopt.
std::optional<std::vector<Rational>> express_in_span(
    const std::vector<Element>& basis, const Element& target);

// Window generators unit^k <> y_I for k <= max_unit_power and positive I
// with entries in 1..num_letters, length <= max_index_len, paired with
// printable labels, in a fixed order.
struct LabeledElements {
  std::vector<Element> elements;
  std::vector<std::string> labels;
};
LabeledElements disjointness_generators(const Alphabet& alphabet,
                                        const Rational& lambda,
                                        int max_unit_power, int max_index_len,
                                        int num_letters);

// Rank of the generator family above; full rank proves the products of unit
// powers and unit-free words are linearly independent over the window.
RankReport check_linear_disjointness(const Alphabet& alphabet,
                                     const Rational& lambda,
                                     int max_unit_power, int max_index_len,
                                     int num_letters);

// Both span inclusions between the generator family and the one-shuffled
// elements over the same window, via exact linear solves. A custom
// generator list can replace the standard one to watch the check fail.
CheckReport check_one_shuffled_span(
    const Alphabet& alphabet, const Rational& lambda, int max_unit_power,
    int max_index_len, int num_letters,
    const LabeledElements* generators_override = nullptr);

}  // namespace qshuffle
