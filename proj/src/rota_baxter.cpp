#include "qshuffle/rota_baxter.hpp"

#include "qshuffle/error.hpp"

namespace qshuffle {

Element rota_baxter_operator(const Element& e) {
  for (const auto& [w, c] : e.terms())
    if (w.is_empty())
      throw Error(ErrorKind::empty_word_operand,
                  "operator domain is spanned by words of length >= 1");
  return prepended(Letter::unit(), e);
}

Element letter_prepend_operator(const Letter& v, const Element& e) {
  if (v.is_unit())
    throw Error(ErrorKind::unit_letter_in_operand,
                "prepended letter must not be the unit");
  for (const auto& [w, c] : e.terms())
    if (w.contains_unit())
      throw Error(ErrorKind::unit_letter_in_operand,
                  "operand contains the unit letter: " + to_string(w));
  return prepended(v, e);
}

Element embed_alpha(const Element& e) {
  return prepended(Letter::unit(), e);
}

Element embed_beta(const Element& e) {
  for (const auto& [w, c] : e.terms())
    if (w.contains_unit())
      throw Error(ErrorKind::unit_letter_in_operand,
                  "embedding domain is unit-free: " + to_string(w));
  return prepended(Letter::unit(), e);
}

Element gamma_plus(int n) {
  if (n < 0)
    throw Error(ErrorKind::config_error, "negative unit power");
  std::vector<Letter> ls(static_cast<std::size_t>(n), Letter::unit());
  return Element::from_word(Word(std::move(ls)));
}

Element gamma_map(int n) {
  return embed_alpha(gamma_plus(n));
}

Element j_embed(const Letter& l) {
  return Element::from_word(Word({l}));
}

RotaBaxterCheckReport check_rota_baxter(
    const LinearMap& op, const BilinearMap& product, const Rational& weight,
    const std::vector<std::pair<Element, Element>>& samples) {
  RotaBaxterCheckReport report;
  report.weight = weight;
  for (const auto& [x, y] : samples) {
    Element px = op(x);
    Element py = op(y);
    Element lhs = product(px, py);
    Element rhs = op(product(x, py));
    rhs += op(product(px, y));
    rhs += weight * op(product(x, y));
    ++report.checked;
    if (lhs == rhs) continue;
    RotaBaxterTrial t;
    t.x = x;
    t.y = y;
    t.lhs = lhs;
    t.rhs = rhs;
    t.pass = false;
    report.failures.push_back(std::move(t));
  }
  return report;
}

}  // namespace qshuffle
