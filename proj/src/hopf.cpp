#include "qshuffle/hopf.hpp"

#include <tuple>

#include "qshuffle/basis.hpp"
#include "qshuffle/error.hpp"
#include "qshuffle/products.hpp"

namespace qshuffle {

TensorSquareElement TensorSquareElement::from_pair(const Word& left,
                                                   const Word& right,
                                                   const Rational& coeff) {
  TensorSquareElement e;
  e.add_term(left, right, coeff);
  return e;
}

void TensorSquareElement::add_term(const Word& left, const Word& right,
                                   const Rational& coeff) {
  if (coeff == 0) return;
  auto key = std::make_pair(left, right);
  auto [it, inserted] = terms_.emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorSquareElement& TensorSquareElement::operator+=(
    const TensorSquareElement& other) {
  for (const auto& [pair, c] : other.terms_)
    add_term(pair.first, pair.second, c);
  return *this;
}

TensorSquareElement TensorSquareElement::operator+(
    const TensorSquareElement& other) const {
  TensorSquareElement out = *this;
  out += other;
  return out;
}

TensorSquareElement TensorSquareElement::operator-() const {
  TensorSquareElement out;
  for (const auto& [pair, c] : terms_) out.terms_.emplace(pair, Rational(-c));
  return out;
}

TensorSquareElement TensorSquareElement::scaled(const Rational& scalar) const {
  TensorSquareElement out;
  if (scalar == 0) return out;
  for (const auto& [pair, c] : terms_) {
    Rational p = c * scalar;
    out.terms_.emplace(pair, p);
  }
  return out;
}

std::string canonical_serialize(const TensorSquareElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [pair, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += to_string(c) + "*";
    out += to_string(pair.first) + "(x)" + to_string(pair.second);
  }
  return out;
}

TensorSquareElement coproduct(const Word& w) {
  TensorSquareElement out;
  for (std::size_t i = 0; i <= w.length(); ++i)
    out.add_term(w.prefix(i), w.suffix_from(i), 1);
  return out;
}

TensorSquareElement coproduct(const Element& e) {
  TensorSquareElement out;
  for (const auto& [w, c] : e.terms()) out += coproduct(w).scaled(c);
  return out;
}

Rational counit(const Element& e) {
  return e.coefficient(Word::empty());
}

Element hopf_multiply(HopfProduct kind, const Element& a, const Element& b,
                      const Rational& lambda, const Alphabet& alphabet) {
  if (kind == HopfProduct::quasi_shuffle)
    return quasi_shuffle(a, b, alphabet);
  return mixable_shuffle(a, b, lambda, alphabet);
}

namespace {

class AntipodeTable {
public:
  AntipodeTable(HopfProduct kind, const Rational& lambda,
                const Alphabet& alphabet)
      : kind_(kind), lambda_(lambda), alphabet_(alphabet) {}

  const Element& at(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    Element s;
    if (w.is_empty()) {
      s = Element::one();
    } else {
      s = Element::from_word(w, -1);
      for (std::size_t i = 1; i < w.length(); ++i) {
        Element right = Element::from_word(w.suffix_from(i));
        s -= hopf_multiply(kind_, at(w.prefix(i)), right, lambda_, alphabet_);
      }
    }
    return memo_.emplace(w, std::move(s)).first->second;
  }

private:
  HopfProduct kind_;
  Rational lambda_;
  const Alphabet& alphabet_;
  std::map<Word, Element> memo_;
};

}  // namespace

Element antipode(const Element& e, HopfProduct kind, const Rational& lambda,
                 const Alphabet& alphabet) {
  alphabet.validate_element(e);
  if (kind == HopfProduct::quasi_shuffle)
    for (const auto& [w, c] : e.terms())
      if (w.contains_unit())
        throw Error(ErrorKind::unit_letter_in_operand,
                    "quasi-shuffle antipode operand contains the unit: " +
                        to_string(w));
  AntipodeTable table(kind, lambda, alphabet);
  Element out;
  for (const auto& [w, c] : e.terms()) out += c * table.at(w);
  return out;
}

Element convolve(const HopfLinearMap& f, const HopfLinearMap& g,
                 const Element& e, HopfProduct kind, const Rational& lambda,
                 const Alphabet& alphabet) {
  Element out;
  for (const auto& [w, c] : e.terms()) {
    TensorSquareElement split = coproduct(w);
    for (const auto& [pair, cc] : split.terms()) {
      Element left = f(Element::from_word(pair.first));
      Element right = g(Element::from_word(pair.second));
      Rational scale = c * cc;
      out += scale * hopf_multiply(kind, left, right, lambda, alphabet);
    }
  }
  return out;
}

namespace {

using TensorCube = std::map<std::tuple<Word, Word, Word>, Rational>;

void cube_add(TensorCube& cube, const Word& a, const Word& b, const Word& c,
              const Rational& coeff) {
  if (coeff == 0) return;
  auto key = std::make_tuple(a, b, c);
  auto [it, inserted] = cube.emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) cube.erase(it);
  }
}

TensorSquareElement tensor_square_multiply(const TensorSquareElement& a,
                                           const TensorSquareElement& b,
                                           HopfProduct kind,
                                           const Rational& lambda,
                                           const Alphabet& alphabet) {
  TensorSquareElement out;
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) {
      Element left = hopf_multiply(kind, Element::from_word(pa.first),
                                   Element::from_word(pb.first), lambda,
                                   alphabet);
      Element right = hopf_multiply(kind, Element::from_word(pa.second),
                                    Element::from_word(pb.second), lambda,
                                    alphabet);
      Rational c = ca * cb;
      for (const auto& [lw, lc] : left.terms())
        for (const auto& [rw, rc] : right.terms()) {
          Rational t = c * lc * rc;
          out.add_term(lw, rw, t);
        }
    }
  return out;
}

}  // namespace

CheckReport check_bialgebra(HopfProduct kind, const Rational& lambda,
                            const Alphabet& alphabet, int degree_bound,
                            const CoproductFn& delta) {
  CheckReport report;
  CoproductFn dl = delta ? delta : [](const Word& w) { return coproduct(w); };
  std::string params =
      std::string("product=") +
      (kind == HopfProduct::quasi_shuffle ? "quasi-shuffle" : "mixable") +
      (kind == HopfProduct::mixable ? " lambda=" + to_string(lambda) : "") +
      " alphabet=" + alphabet.description() +
      " degree<=" + std::to_string(degree_bound);
  std::vector<Word> basis = words_up_to_degree(alphabet, degree_bound);

  {
    bool pass = true;
    std::string witness;
    for (const Word& w : basis) {
      TensorCube lhs, rhs;
      TensorSquareElement split = dl(w);
      for (const auto& [pair, c] : split.terms()) {
        TensorSquareElement left_split = dl(pair.first);
        for (const auto& [pair2, c2] : left_split.terms())
          cube_add(lhs, pair2.first, pair2.second, pair.second, c * c2);
        TensorSquareElement right_split = dl(pair.second);
        for (const auto& [pair2, c2] : right_split.terms())
          cube_add(rhs, pair.first, pair2.first, pair2.second, c * c2);
      }
      if (lhs != rhs) {
        pass = false;
        witness = "coassociativity fails on " + to_string(w);
        break;
      }
    }
    report.add("coproduct-coassociative", params, pass, witness);
  }

  {
    bool pass = true;
    std::string witness;
    for (const Word& w : basis) {
      Element left, right;
      TensorSquareElement split = dl(w);
      for (const auto& [pair, c] : split.terms()) {
        left.add_term(pair.second,
                      c * counit(Element::from_word(pair.first)));
        right.add_term(pair.first,
                       c * counit(Element::from_word(pair.second)));
      }
      Element expect = Element::from_word(w);
      if (left != expect || right != expect) {
        pass = false;
        witness = "counit law fails on " + to_string(w);
        break;
      }
    }
    report.add("counit-laws", params, pass, witness);
  }

  {
    bool pass = true;
    std::string witness;
    for (const Word& a : basis) {
      for (const Word& b : basis) {
        Element ab = hopf_multiply(kind, Element::from_word(a),
                                   Element::from_word(b), lambda, alphabet);
        TensorSquareElement lhs = coproduct(ab);
        if (delta) {
          lhs = TensorSquareElement();
          for (const auto& [w, c] : ab.terms()) lhs += dl(w).scaled(c);
        }
        TensorSquareElement rhs =
            tensor_square_multiply(dl(a), dl(b), kind, lambda, alphabet);
        if (lhs != rhs) {
          pass = false;
          witness = "coproduct not multiplicative on " + to_string(a) + ", " +
                    to_string(b);
          break;
        }
      }
      if (!pass) break;
    }
    report.add("coproduct-multiplicative", params, pass, witness);
  }

  {
    bool pass = true;
    std::string witness;
    for (const Word& a : basis) {
      for (const Word& b : basis) {
        Element ab = hopf_multiply(kind, Element::from_word(a),
                                   Element::from_word(b), lambda, alphabet);
        Rational lhs = counit(ab);
        Rational rhs = counit(Element::from_word(a)) *
                       counit(Element::from_word(b));
        if (lhs != rhs) {
          pass = false;
          witness = "counit not multiplicative on " + to_string(a) + ", " +
                    to_string(b);
          break;
        }
      }
      if (!pass) break;
    }
    report.add("counit-multiplicative", params, pass, witness);
  }

  {
    bool pass = true;
    std::string witness;
    for (const Word& w : basis) {
      Element e = Element::from_word(w);
      Element expect = counit(e) * Element::one();
      Element left, right;
      TensorSquareElement split = dl(w);
      for (const auto& [pair, c] : split.terms()) {
        Element su = antipode(Element::from_word(pair.first), kind, lambda,
                              alphabet);
        left += c * hopf_multiply(kind, su,
                                  Element::from_word(pair.second), lambda,
                                  alphabet);
        Element sv = antipode(Element::from_word(pair.second), kind, lambda,
                              alphabet);
        right += c * hopf_multiply(kind, Element::from_word(pair.first), sv,
                                   lambda, alphabet);
      }
      if (left != expect || right != expect) {
        pass = false;
        witness = "antipode identity fails on " + to_string(w);
        break;
      }
    }
    report.add("antipode-convolution-inverse", params, pass, witness);
  }

  return report;
}

unsigned long long graded_dimension(const Alphabet& alphabet, int degree) {
  if (degree < 0) return 0;
  std::vector<unsigned long long> dim(static_cast<std::size_t>(degree) + 1, 0);
  dim[0] = 1;
  for (int d = 1; d <= degree; ++d) {
    unsigned long long total = 0;
    for (int k = 1; k <= d; ++k)
      total += static_cast<unsigned long long>(alphabet.slice_size(k)) *
               dim[static_cast<std::size_t>(d - k)];
    dim[static_cast<std::size_t>(d)] = total;
  }
  return dim[static_cast<std::size_t>(degree)];
}

}  // namespace qshuffle
