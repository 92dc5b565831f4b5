#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qshuffle/basis.hpp>
#include <qshuffle/error.hpp>
#include <qshuffle/products.hpp>
#include <qshuffle/rota_baxter.hpp>

using namespace qshuffle;

namespace {

const Letter z1("z1", 1), z2("z2", 2);

Element parse(const Alphabet& a, const std::string& text) {
  return parse_element(text, a);
}

// every pair of basis elements from words with length in [1, max_len]
std::vector<std::pair<Element, Element>> word_pairs(
    const std::vector<Letter>& pool, int max_len) {
  std::vector<Word> ws = words_up_to_length(pool, max_len, 1);
  std::vector<std::pair<Element, Element>> out;
  for (const Word& a : ws)
    for (const Word& b : ws)
      out.emplace_back(Element::from_word(a), Element::from_word(b));
  return out;
}

}  // namespace

TEST_CASE("unit-prepend operator shifts every term") {
  Alphabet st = Alphabet::make_stuffle();
  CHECK(rota_baxter_operator(parse(st, "[z1]")) == parse(st, "[1,z1]"));
  CHECK(rota_baxter_operator(parse(st, "2*[z1] + [1,z2]")) ==
        parse(st, "2*[1,z1] + [1,1,z2]"));
  CHECK(rota_baxter_operator(Element::zero()).is_zero());
  try {
    rota_baxter_operator(parse(st, "[e] + [z1]"));
    FAIL("expected empty_word_operand");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::empty_word_operand);
  }
}

TEST_CASE("letter-prepend operator forbids the unit on both sides") {
  Alphabet st = Alphabet::make_stuffle();
  CHECK(letter_prepend_operator(z2, parse(st, "[z1]")) == parse(st, "[z2,z1]"));
  CHECK(letter_prepend_operator(z1, Element::one()) == parse(st, "[z1]"));
  try {
    letter_prepend_operator(Letter::unit(), parse(st, "[z1]"));
    FAIL("expected unit_letter_in_operand");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unit_letter_in_operand);
  }
  CHECK_THROWS_AS(letter_prepend_operator(z1, parse(st, "[1,z1]")), Error);
}

TEST_CASE("embeddings prepend a unit slot") {
  Alphabet st = Alphabet::make_stuffle();
  CHECK(embed_alpha(parse(st, "[z1,z2]")) == parse(st, "[1,z1,z2]"));
  CHECK(embed_alpha(Element::one()) == parse(st, "[1]"));
  CHECK(embed_alpha(parse(st, "[1]")) == parse(st, "[1,1]"));
  CHECK(embed_beta(parse(st, "[z1]")) == parse(st, "[1,z1]"));
  try {
    embed_beta(parse(st, "[1,z1]"));
    FAIL("expected unit_letter_in_operand");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unit_letter_in_operand);
  }
}

TEST_CASE("unit powers compose with the extra-slot embedding") {
  Alphabet st = Alphabet::make_stuffle();
  CHECK(gamma_plus(0) == Element::one());
  CHECK(gamma_plus(2) == parse(st, "[1,1]"));
  CHECK(gamma_map(0) == parse(st, "[1]"));
  for (int n = 0; n <= 8; ++n)
    CHECK(embed_alpha(gamma_plus(n)) == gamma_map(n));
  CHECK_THROWS_AS(gamma_plus(-1), Error);
  CHECK(j_embed(z2) == parse(st, "[z2]"));
}

TEST_CASE("unit-prepend satisfies the weight identity for the mixable product") {
  Alphabet st = Alphabet::make_stuffle();
  auto samples = word_pairs({Letter::unit(), z1, z2}, 2);
  for (const Rational& lam :
       {Rational(0), Rational(1), Rational(-1), parse_rational("5/3")}) {
    CAPTURE(to_string(lam));
    auto op = [](const Element& e) { return rota_baxter_operator(e); };
    auto prod = [&](const Element& a, const Element& b) {
      return mixable_shuffle(a, b, lam, st);
    };
    RotaBaxterCheckReport r = check_rota_baxter(op, prod, lam, samples);
    CHECK(r.all_pass());
    CHECK(r.checked == samples.size());
    CHECK(r.first_failure() == nullptr);
  }
}

TEST_CASE("the identity also holds on non-basis linear combinations") {
  Alphabet st = Alphabet::make_stuffle();
  Rational lam = parse_rational("-7/4");
  std::vector<std::pair<Element, Element>> samples = {
      {parse(st, "[z1] + 2*[z2,z1]"), parse(st, "-1/3*[z1,z1] + [1,z2]")},
      {parse(st, "5*[1]"), parse(st, "[z2] + [z1,1,z1]")},
  };
  auto op = [](const Element& e) { return rota_baxter_operator(e); };
  auto prod = [&](const Element& a, const Element& b) {
    return mixable_shuffle(a, b, lam, st);
  };
  CHECK(check_rota_baxter(op, prod, lam, samples).all_pass());
}

TEST_CASE("letter-prepend satisfies the weight-zero identity for the shuffle") {
  Alphabet st = Alphabet::make_stuffle();
  auto samples = word_pairs({z1, z2}, 2);
  auto op = [&](const Element& e) { return letter_prepend_operator(z1, e); };
  auto prod = [](const Element& a, const Element& b) { return shuffle(a, b); };
  RotaBaxterCheckReport r = check_rota_baxter(op, prod, 0, samples);
  CHECK(r.all_pass());
  CHECK(r.checked == samples.size());
}

TEST_CASE("a wrong weight is always detected") {
  Alphabet st = Alphabet::make_stuffle();
  auto samples = word_pairs({Letter::unit(), z1}, 2);
  Rational lam = 1;
  auto op = [](const Element& e) { return rota_baxter_operator(e); };
  auto prod = [&](const Element& a, const Element& b) {
    return mixable_shuffle(a, b, lam, st);
  };
  RotaBaxterCheckReport r = check_rota_baxter(op, prod, lam + 1, samples);
  CHECK_FALSE(r.all_pass());
  REQUIRE(r.first_failure() != nullptr);
  // the two sides differ exactly by P(x y), which never vanishes here
  const RotaBaxterTrial& t = *r.first_failure();
  CHECK(t.lhs != t.rhs);
  CHECK(t.lhs - t.rhs ==
        -rota_baxter_operator(mixable_shuffle(t.x, t.y, lam, st)));

  // the letter-prepend operator only works at weight zero
  auto vop = [&](const Element& e) { return letter_prepend_operator(z1, e); };
  auto vprod = [](const Element& a, const Element& b) { return shuffle(a, b); };
  RotaBaxterCheckReport r2 =
      check_rota_baxter(vop, vprod, 1, word_pairs({z1, z2}, 2));
  CHECK_FALSE(r2.all_pass());
}
