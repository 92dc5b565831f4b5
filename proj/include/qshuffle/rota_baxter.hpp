#pragma once
#include <functional>
#include <utility>
#include <vector>

#include "qshuffle/alphabet.hpp"
#include "qshuffle/element.hpp"
#include "qshuffle/report.hpp"

namespace qshuffle {

using LinearMap = std::function<Element(const Element&)>;
using BilinearMap = std::function<Element(const Element&, const Element&)>;

// Unit-prepending operator on words of length >= 1: the tensor factor in
// slot zero is frozen and a fresh unit slot is pushed in front.
Element rota_baxter_operator(const Element& e);

// Letter-prepending operator; v must not be the unit. Satisfies the weight
// zero identity against the plain shuffle.
Element letter_prepend_operator(const Letter& v, const Element& e);

// Unit-prepend: carries the plain-word algebra onto the span of words whose
// leading slot holds the unit, turning the mixable product into the
// augmented one.
Element embed_alpha(const Element& e);

// Same prepend restricted to unit-free words; rejects unit letters.
Element embed_beta(const Element& e);

// n unit slots; the length-(n+1) variant is the composite with embed_alpha.
Element gamma_plus(int n);
Element gamma_map(int n);

// single-letter word
Element j_embed(const Letter& l);

struct RotaBaxterTrial {
  Element x, y;
  Element lhs, rhs;
  bool pass = false;
};

struct RotaBaxterCheckReport {
  Rational weight;
  std::vector<RotaBaxterTrial> failures;
  std::size_t checked = 0;
  bool all_pass() const { return failures.empty(); }
  const RotaBaxterTrial* first_failure() const {
    return failures.empty() ? nullptr : &failures.front();
  }
};

// Evaluates P(x)P(y) = P(xP(y)) + P(P(x)y) + weight*P(xy) on every sample
// pair. Failing trials keep both sides for the witness; passing trials are
// only counted.
RotaBaxterCheckReport check_rota_baxter(
    const LinearMap& op, const BilinearMap& product, const Rational& weight,
    const std::vector<std::pair<Element, Element>>& samples);

}  // namespace qshuffle
