#include "qshuffle/products.hpp"

#include <cassert>

#include "qshuffle/error.hpp"

namespace qshuffle {

int ShufflePattern::left_count() const {
  int n = 0;
  for (Deck d : slots)
    if (d == Deck::left) ++n;
  return n;
}

int ShufflePattern::right_count() const {
  return static_cast<int>(slots.size()) - left_count();
}

std::vector<int> ShufflePattern::admissible_pairs() const {
  std::vector<int> out;
  for (std::size_t k = 0; k + 1 < slots.size(); ++k)
    if (slots[k] == Deck::left && slots[k + 1] == Deck::right)
      out.push_back(static_cast<int>(k) + 1);
  return out;
}

namespace {

void require_card(int m, int n) {
  if (m < 0 || n < 0)
    throw Error(ErrorKind::config_error, "negative word length");
}

}  // namespace

std::vector<ShufflePattern> enumerate_shuffles(int m, int n) {
  require_card(m, n);
  std::vector<ShufflePattern> out;
  std::vector<Deck> current;
  current.reserve(static_cast<std::size_t>(m + n));
  auto rec = [&](auto&& self, int lefts, int rights) -> void {
    if (lefts == 0 && rights == 0) {
      out.push_back({current});
      return;
    }
    if (lefts > 0) {
      current.push_back(Deck::left);
      self(self, lefts - 1, rights);
      current.pop_back();
    }
    if (rights > 0) {
      current.push_back(Deck::right);
      self(self, lefts, rights - 1);
      current.pop_back();
    }
  };
  rec(rec, m, n);
  return out;
}

std::vector<MixableShuffle> enumerate_mixable_shuffles(int m, int n) {
  std::vector<MixableShuffle> out;
  for (ShufflePattern& pattern : enumerate_shuffles(m, n)) {
    std::vector<int> adm = pattern.admissible_pairs();
    assert(adm.size() < 8 * sizeof(unsigned long long));
    const unsigned long long subsets = 1ull << adm.size();
    for (unsigned long long mask = 0; mask < subsets; ++mask) {
      MixableShuffle ms;
      ms.pattern = pattern;
      for (std::size_t i = 0; i < adm.size(); ++i)
        if (mask >> i & 1ull) ms.merges.push_back(adm[i]);
      out.push_back(std::move(ms));
    }
  }
  return out;
}

Word apply_shuffle(const ShufflePattern& pattern, const Word& a,
                   const Word& b) {
  assert(pattern.left_count() == static_cast<int>(a.length()) &&
         pattern.right_count() == static_cast<int>(b.length()));
  std::vector<Letter> out;
  out.reserve(pattern.slots.size());
  std::size_t ai = 0, bi = 0;
  for (Deck d : pattern.slots)
    out.push_back(d == Deck::left ? a.at(ai++) : b.at(bi++));
  return Word(std::move(out));
}

std::optional<Word> apply_mixable_shuffle(const MixableShuffle& ms,
                                          const Word& a, const Word& b,
                                          const Alphabet& alphabet) {
  const auto& slots = ms.pattern.slots;
  assert(ms.pattern.left_count() == static_cast<int>(a.length()) &&
         ms.pattern.right_count() == static_cast<int>(b.length()));
  std::vector<Letter> out;
  std::size_t ai = 0, bi = 0, mi = 0;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    Letter cur = slots[k] == Deck::left ? a.at(ai++) : b.at(bi++);
    bool merge_here =
        mi < ms.merges.size() &&
        ms.merges[mi] == static_cast<int>(k) + 1;
    if (merge_here) {
      assert(slots[k] == Deck::left && slots[k + 1] == Deck::right);
      Letter next = b.at(bi++);
      ++k;
      ++mi;
      auto merged = alphabet.bracket(cur, next);
      if (!merged) return std::nullopt;
      out.push_back(*merged);
    } else {
      out.push_back(cur);
    }
  }
  return Word(std::move(out));
}

namespace {

Element shuffle_rec(const Word& a, const Word& b) {
  if (a.is_empty()) return Element::from_word(b);
  if (b.is_empty()) return Element::from_word(a);
  Element out = prepended(a.at(0), shuffle_rec(a.tail(), b));
  out += prepended(b.at(0), shuffle_rec(a, b.tail()));
  return out;
}

Element qsh_rec(const Word& a, const Word& b, const Alphabet& alphabet) {
  if (a.is_empty()) return Element::from_word(b);
  if (b.is_empty()) return Element::from_word(a);
  Element out = prepended(a.at(0), qsh_rec(a.tail(), b, alphabet));
  out += prepended(b.at(0), qsh_rec(a, b.tail(), alphabet));
  if (auto h = alphabet.bracket(a.at(0), b.at(0)))
    out += prepended(*h, qsh_rec(a.tail(), b.tail(), alphabet));
  return out;
}

Element msh_rec(const Word& a, const Word& b, const Rational& lambda,
                const Alphabet& alphabet) {
  if (a.is_empty()) return Element::from_word(b);
  if (b.is_empty()) return Element::from_word(a);
  Element out = prepended(a.at(0), msh_rec(a.tail(), b, lambda, alphabet));
  out += prepended(b.at(0), msh_rec(a, b.tail(), lambda, alphabet));
  if (lambda != 0) {
    // the merged head multiplies in the unital extension: the unit letter is
    // neutral, two alphabet letters bracket, zero kills the branch
    if (auto h = alphabet.bracket(a.at(0), b.at(0)))
      out += lambda * prepended(*h, msh_rec(a.tail(), b.tail(), lambda, alphabet));
  }
  return out;
}

void require_unit_free(const Word& w, const char* what) {
  if (w.contains_unit())
    throw Error(ErrorKind::unit_letter_in_operand,
                std::string(what) + " operand contains the unit letter: " +
                    to_string(w));
}

}  // namespace

Element shuffle_explicit(const Word& a, const Word& b) {
  Element out;
  for (const ShufflePattern& p : enumerate_shuffles(
           static_cast<int>(a.length()), static_cast<int>(b.length())))
    out.add_term(apply_shuffle(p, a, b), 1);
  return out;
}

Element shuffle_recursive(const Word& a, const Word& b) {
  return shuffle_rec(a, b);
}

Element quasi_shuffle(const Word& a, const Word& b, const Alphabet& alphabet) {
  alphabet.validate_word(a);
  alphabet.validate_word(b);
  require_unit_free(a, "quasi-shuffle");
  require_unit_free(b, "quasi-shuffle");
  return qsh_rec(a, b, alphabet);
}

Element mixable_shuffle_explicit(const Word& a, const Word& b,
                                 const Rational& lambda,
                                 const Alphabet& alphabet) {
  alphabet.validate_word(a);
  alphabet.validate_word(b);
  Element out;
  for (const MixableShuffle& ms : enumerate_mixable_shuffles(
           static_cast<int>(a.length()), static_cast<int>(b.length()))) {
    Rational coeff =
        rational_pow(lambda, static_cast<unsigned>(ms.merges.size()));
    if (coeff == 0) continue;
    if (auto w = apply_mixable_shuffle(ms, a, b, alphabet))
      out.add_term(*w, coeff);
  }
  return out;
}

Element mixable_shuffle_recursive(const Word& a, const Word& b,
                                  const Rational& lambda,
                                  const Alphabet& alphabet) {
  alphabet.validate_word(a);
  alphabet.validate_word(b);
  return msh_rec(a, b, lambda, alphabet);
}

std::map<int, Element> mixable_shuffle_lambda_graded(const Word& a,
                                                     const Word& b,
                                                     const Alphabet& alphabet) {
  alphabet.validate_word(a);
  alphabet.validate_word(b);
  std::map<int, Element> out;
  for (const MixableShuffle& ms : enumerate_mixable_shuffles(
           static_cast<int>(a.length()), static_cast<int>(b.length())))
    if (auto w = apply_mixable_shuffle(ms, a, b, alphabet))
      out[static_cast<int>(ms.merges.size())].add_term(*w, 1);
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

namespace {

template <typename WordProduct>
Element bilinear(const Element& a, const Element& b, WordProduct&& product) {
  Element out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Rational c = ca * cb;
      Element part = product(wa, wb);
      for (const auto& [w, pc] : part.terms()) {
        Rational t = pc * c;
        out.add_term(w, t);
      }
    }
  return out;
}

}  // namespace

Element shuffle(const Element& a, const Element& b) {
  return bilinear(a, b,
                  [](const Word& x, const Word& y) { return shuffle_rec(x, y); });
}

Element quasi_shuffle(const Element& a, const Element& b,
                      const Alphabet& alphabet) {
  for (const Element* e : {&a, &b}) {
    alphabet.validate_element(*e);
    for (const auto& [w, c] : e->terms()) require_unit_free(w, "quasi-shuffle");
  }
  return bilinear(a, b, [&](const Word& x, const Word& y) {
    return qsh_rec(x, y, alphabet);
  });
}

Element mixable_shuffle(const Element& a, const Element& b,
                        const Rational& lambda, const Alphabet& alphabet) {
  alphabet.validate_element(a);
  alphabet.validate_element(b);
  return bilinear(a, b, [&](const Word& x, const Word& y) {
    return msh_rec(x, y, lambda, alphabet);
  });
}

Element augmented_product(const Element& a, const Element& b,
                          const Rational& lambda, const Alphabet& alphabet) {
  for (const Element* e : {&a, &b}) {
    alphabet.validate_element(*e);
    for (const auto& [w, c] : e->terms())
      if (w.is_empty())
        throw Error(ErrorKind::empty_word_operand,
                    "augmented product needs a leading coefficient slot in "
                    "every word");
  }
  return bilinear(a, b, [&](const Word& x, const Word& y) -> Element {
    auto head = alphabet.bracket(x.at(0), y.at(0));
    if (!head) return Element::zero();
    return prepended(*head, msh_rec(x.tail(), y.tail(), lambda, alphabet));
  });
}

Element concat_product(const Element& a, const Element& b) {
  return bilinear(a, b, [](const Word& x, const Word& y) {
    return Element::from_word(x.concat(y));
  });
}

}  // namespace qshuffle
