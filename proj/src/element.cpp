#include "qshuffle/element.hpp"

#include <cctype>
#include <cstddef>

#include "qshuffle/alphabet.hpp"
#include "qshuffle/error.hpp"

namespace qshuffle {

Element Element::from_word(const Word& w, const Rational& coeff) {
  Element e;
  e.add_term(w, coeff);
  return e;
}

const Element& Element::zero() {
  static const Element e;
  return e;
}

const Element& Element::one() {
  static const Element e = from_word(Word::empty());
  return e;
}

Rational Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const Word& w, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, Rational(-c));
  return *this;
}

Element Element::operator+(const Element& other) const {
  Element out = *this;
  out += other;
  return out;
}

Element Element::operator-(const Element& other) const {
  Element out = *this;
  out -= other;
  return out;
}

Element Element::operator-() const {
  Element out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, Rational(-c));
  return out;
}

Element Element::scaled(const Rational& scalar) const {
  Element out;
  if (scalar == 0) return out;
  for (const auto& [w, c] : terms_) {
    Rational p = c * scalar;
    out.terms_.emplace(w, p);
  }
  return out;
}

Element operator*(const Rational& scalar, const Element& e) {
  return e.scaled(scalar);
}

Element prepended(const Letter& head, const Element& e) {
  Element out;
  for (const auto& [w, c] : e.terms()) out.add_term(w.prepended(head), c);
  return out;
}

std::string canonical_serialize(const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += to_string(c) + "*";
    out += to_string(w);
  }
  return out;
}

namespace {

// Scanner for the canonical element grammar:
//   element := '0' | term (('+'|'-') term)*
//   term    := rational '*' word | rational? word   (sign folds into coeff)
//   word    := '[' 'e' ']' | '[' name (',' name)* ']'
class ElementScanner {
public:
  ElementScanner(const std::string& text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  Element parse() {
    skip_ws();
    if (at_end()) fail("expected element", ErrorKind::empty_input);
    Element out;
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (at_end()) return out;  // the bare zero element
      pos_ = save;
    }
    bool negative = take_sign();
    parse_term(out, negative);
    skip_ws();
    while (!at_end()) {
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      bool neg = op == '-';
      if (peek_sign()) neg = neg != take_sign();
      parse_term(out, neg);
      skip_ws();
    }
    return out;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool peek_sign() const {
    return !at_end() && (peek() == '+' || peek() == '-');
  }

  bool take_sign() {
    if (!peek_sign()) return false;
    bool negative = peek() == '-';
    ++pos_;
    skip_ws();
    return negative;
  }

  [[noreturn]] void fail(const std::string& msg,
                         ErrorKind kind = ErrorKind::syntax_error) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string where = " at line " + std::to_string(line) + ", column " +
                        std::to_string(col);
    if (kind == ErrorKind::syntax_error)
      throw SyntaxError(msg + where, line, col);
    throw Error(kind, msg + where);
  }

  std::string take_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  Rational parse_coeff() {
    std::string num = take_digits();
    std::string den = "1";
    if (!at_end() && peek() == '/') {
      ++pos_;
      den = take_digits();
    }
    if (den == "0") fail("zero denominator");
    Rational r((mpz_class(num, 10)), mpz_class(den, 10));
    r.canonicalize();
    return r;
  }

  std::string take_name() {
    std::size_t start = pos_;
    if (!at_end() && peek() == '1') {
      ++pos_;
      return "1";
    }
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_'))
      ++pos_;
    if (pos_ == start) fail("expected letter name");
    return text_.substr(start, pos_ - start);
  }

  Word parse_word() {
    if (at_end() || peek() != '[') fail("expected '['");
    ++pos_;
    skip_ws();
    std::vector<Letter> letters;
    std::string first = take_name();
    if (first == "e") {
      skip_ws();
      if (at_end() || peek() != ']') fail("expected ']' after 'e'");
      ++pos_;
      return Word::empty();
    }
    letters.push_back(resolve(first));
    skip_ws();
    while (!at_end() && peek() == ',') {
      ++pos_;
      skip_ws();
      letters.push_back(resolve(take_name()));
      skip_ws();
    }
    if (at_end() || peek() != ']') fail("expected ']'");
    ++pos_;
    return Word(std::move(letters));
  }

  Letter resolve(const std::string& name) {
    if (name == "1") return Letter::unit();
    if (auto l = alphabet_.find(name)) return *l;
    fail("unknown letter '" + name + "' for alphabet " +
             alphabet_.description(),
         ErrorKind::unknown_letter);
  }

  void parse_term(Element& out, bool negative) {
    Rational coeff = 1;
    if (peek() != '[') {
      coeff = parse_coeff();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      } else {
        fail("expected '*' between coefficient and word");
      }
    }
    if (negative) coeff = -coeff;
    out.add_term(parse_word(), coeff);
  }

  const std::string& text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(const std::string& text, const Alphabet& alphabet) {
  ElementScanner scanner(text, alphabet);
  return scanner.parse();
}

}  // namespace qshuffle
