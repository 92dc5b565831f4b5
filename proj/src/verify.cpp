#include "qshuffle/verify.hpp"

#include <random>
#include <utility>
#include <vector>

#include "qshuffle/basis.hpp"
#include "qshuffle/element.hpp"
#include "qshuffle/hopf.hpp"
#include "qshuffle/products.hpp"
#include "qshuffle/rota_baxter.hpp"
#include "qshuffle/sampling.hpp"
#include "qshuffle/structure.hpp"

namespace qshuffle {

namespace {

std::string pair_witness(const Word& a, const Word& b) {
  return "a=" + to_string(a) + " b=" + to_string(b);
}

std::vector<std::pair<Word, Word>> bounded_pairs(
    const std::vector<Word>& words, int total_length) {
  std::vector<std::pair<Word, Word>> out;
  for (const Word& a : words)
    for (const Word& b : words)
      if (static_cast<int>(a.length() + b.length()) <= total_length)
        out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<Word, Word>> budgeted(
    std::vector<std::pair<Word, Word>> pairs, std::size_t budget,
    std::uint64_t seed) {
  if (pairs.size() <= budget) return pairs;
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Word, Word>> out;
  out.reserve(budget);
  for (std::size_t i : sample_indices(rng, pairs.size(), budget))
    out.push_back(std::move(pairs[i]));
  return out;
}

// first letters of the alphabet, as many as exist up to the requested count
std::vector<Letter> leading_letters(const Alphabet& alphabet, int count) {
  std::vector<Letter> out;
  for (int i = 1; i <= count; ++i) {
    if (alphabet.kind() != Alphabet::Kind::stuffle &&
        static_cast<std::size_t>(i) > alphabet.letter_count())
      break;
    out.push_back(alphabet.letter_by_index(i));
  }
  return out;
}

}  // namespace

VerifyResult run_verification_suite(const RunConfig& config) {
  CheckReport report;
  const Alphabet& alphabet = config.alphabet;
  const Rational& lambda = config.lambda;
  const std::string lam = to_string(lambda);
  const std::string base_params =
      "alphabet=" + alphabet.description() + " lambda=" + lam +
      " maxdeg=" + std::to_string(config.max_degree) +
      " maxlen=" + std::to_string(config.max_length) +
      " seed=" + std::to_string(config.seed);

  std::vector<Letter> plain = leading_letters(alphabet, 2);
  std::vector<Letter> with_unit = plain;
  with_unit.insert(with_unit.begin(), Letter::unit());

  report.append(check_hoffman_axioms(alphabet, config.max_degree));

  {
    auto words = words_up_to_length(with_unit, config.max_length);
    auto pairs = budgeted(bounded_pairs(words, config.max_length),
                          config.pair_budget, config.seed ^ 0x5u);
    bool pass = true;
    std::string witness;
    for (const auto& [a, b] : pairs) {
      if (shuffle_explicit(a, b) != shuffle_recursive(a, b)) {
        pass = false;
        witness = pair_witness(a, b);
        break;
      }
    }
    report.add("shuffle-explicit-vs-recursive",
               base_params + " pairs=" + std::to_string(pairs.size()), pass,
               witness);

    pass = true;
    witness.clear();
    for (const auto& [a, b] : pairs) {
      if (mixable_shuffle_explicit(a, b, lambda, alphabet) !=
          mixable_shuffle_recursive(a, b, lambda, alphabet)) {
        pass = false;
        witness = pair_witness(a, b);
        break;
      }
    }
    report.add("mixable-explicit-vs-recursive",
               base_params + " pairs=" + std::to_string(pairs.size()), pass,
               witness);

    pass = true;
    witness.clear();
    for (const auto& [a, b] : pairs) {
      if (mixable_shuffle_explicit(a, b, 0, alphabet) !=
          shuffle_explicit(a, b)) {
        pass = false;
        witness = pair_witness(a, b);
        break;
      }
    }
    report.add("mixable-weight-zero-is-shuffle",
               base_params + " pairs=" + std::to_string(pairs.size()), pass,
               witness);
  }

  {
    Alphabet zero = Alphabet::make_zero({Letter("x", 1), Letter("y", 2)});
    auto words =
        words_up_to_length(leading_letters(zero, 2), config.max_length);
    auto pairs = bounded_pairs(words, config.max_length);
    bool pass = true;
    std::string witness;
    for (const auto& [a, b] : pairs) {
      if (quasi_shuffle(a, b, zero) != shuffle_explicit(a, b)) {
        pass = false;
        witness = pair_witness(a, b);
        break;
      }
    }
    report.add("quasi-shuffle-zero-bracket-is-shuffle",
               "alphabet=zero(x:1,y:2) maxlen=" +
                   std::to_string(config.max_length) +
                   " pairs=" + std::to_string(pairs.size()),
               pass, witness);
  }

  {
    auto words = words_up_to_length(plain, config.max_length);
    auto pairs = bounded_pairs(words, config.max_length);
    bool pass = true;
    std::string witness;
    for (const auto& [a, b] : pairs) {
      Element lhs = f_tilde(quasi_shuffle(a, b, alphabet));
      Element rhs = mixable_shuffle(f_tilde(Element::from_word(a)),
                                    f_tilde(Element::from_word(b)), 1,
                                    alphabet);
      if (lhs != rhs) {
        pass = false;
        witness = pair_witness(a, b);
        break;
      }
    }
    report.add("quasi-shuffle-is-weight-one-mixable",
               base_params + " pairs=" + std::to_string(pairs.size()), pass,
               witness);

    pass = true;
    witness.clear();
    for (const auto& [a, b] : pairs) {
      Element lhs = g_rescale(
          mixable_shuffle_recursive(a, b, lambda, alphabet), lambda);
      Element rhs = mixable_shuffle(
          g_rescale(Element::from_word(a), lambda),
          g_rescale(Element::from_word(b), lambda), 1, alphabet);
      if (lhs != rhs) {
        pass = false;
        witness = pair_witness(a, b);
        break;
      }
    }
    report.add("rescaling-multiplicative",
               base_params + " pairs=" + std::to_string(pairs.size()), pass,
               witness);
  }

  {
    auto words = words_up_to_length(with_unit, config.max_length, 1);
    std::vector<std::pair<Word, Word>> all;
    for (const Word& a : words)
      for (const Word& b : words) all.emplace_back(a, b);
    auto pairs = budgeted(std::move(all), config.pair_budget,
                          config.seed ^ 0x11u);
    std::vector<std::pair<Element, Element>> samples;
    samples.reserve(pairs.size());
    for (const auto& [a, b] : pairs)
      samples.emplace_back(Element::from_word(a), Element::from_word(b));
    auto product = [&](const Element& x, const Element& y) {
      return augmented_product(x, y, lambda, alphabet);
    };
    auto rb = check_rota_baxter(
        [](const Element& e) { return rota_baxter_operator(e); }, product,
        lambda, samples);
    std::string witness;
    if (const RotaBaxterTrial* t = rb.first_failure())
      witness = pair_witness(t->x.terms().begin()->first,
                             t->y.terms().begin()->first);
    report.add("rota-baxter-unit-prepend",
               base_params + " pairs=" + std::to_string(samples.size()),
               rb.all_pass(), witness);
  }

  {
    auto words = words_up_to_length(plain, config.max_length);
    std::vector<std::pair<Element, Element>> samples;
    for (const Word& a : words)
      for (const Word& b : words)
        samples.emplace_back(Element::from_word(a), Element::from_word(b));
    Letter v = plain.empty() ? Letter("x", 1) : plain.front();
    auto rb = check_rota_baxter(
        [&](const Element& e) { return letter_prepend_operator(v, e); },
        [](const Element& x, const Element& y) { return shuffle(x, y); },
        0, samples);
    std::string witness;
    if (const RotaBaxterTrial* t = rb.first_failure())
      witness = pair_witness(t->x.terms().begin()->first,
                             t->y.terms().begin()->first);
    report.add("rota-baxter-letter-prepend",
               base_params + " weight=0 v=" + v.name() +
                   " pairs=" + std::to_string(samples.size()),
               rb.all_pass(), witness);
  }

  {
    // a wrong weight must be detected; the identity cannot hold at two
    // different weights on a window with nonzero products
    auto words = words_up_to_length(with_unit, 2, 1);
    std::vector<std::pair<Element, Element>> samples;
    for (const Word& a : words)
      for (const Word& b : words)
        samples.emplace_back(Element::from_word(a), Element::from_word(b));
    auto product = [&](const Element& x, const Element& y) {
      return augmented_product(x, y, lambda, alphabet);
    };
    Rational wrong = lambda + 1;
    auto rb = check_rota_baxter(
        [](const Element& e) { return rota_baxter_operator(e); }, product,
        wrong, samples);
    report.add("rota-baxter-mismatch-detected",
               base_params + " wrong-weight=" + to_string(wrong),
               !rb.all_pass(), rb.all_pass() ? "mismatch not detected" : "");
  }

  {
    bool pass = true;
    std::string witness;
    for (int n = 0; n <= 8; ++n) {
      if (embed_alpha(gamma_plus(n)) != gamma_map(n)) {
        pass = false;
        witness = "n=" + std::to_string(n);
        break;
      }
    }
    report.add("unit-tower-embedding-compatible", "n<=8", pass, witness);
  }

  report.append(check_bialgebra(HopfProduct::quasi_shuffle, lambda, alphabet,
                                config.max_degree));
  report.append(check_bialgebra(HopfProduct::mixable, lambda, alphabet,
                                std::max(1, config.max_degree - 1)));

  {
    const int m_max = std::min(4, config.max_length);
    const int len_max = std::min(3, config.max_length);
    bool pass = true;
    std::string witness;
    for (int m = 0; m <= m_max && pass; ++m) {
      for (const IndexSequence& seq : positive_sequences(2, len_max)) {
        if (unit_power_product(m, seq, lambda, alphabet) !=
            unit_power_shuffle_sum(m, seq, lambda, alphabet)) {
          pass = false;
          witness = "m=" + std::to_string(m) + " I=" + to_string(seq);
          break;
        }
      }
    }
    report.add("unit-power-closed-form",
               base_params + " m<=" + std::to_string(m_max) +
                   " len<=" + std::to_string(len_max),
               pass, witness);
  }

  {
    const int n_max = std::min(3, config.max_length);
    RankReport rank =
        check_linear_disjointness(alphabet, lambda, n_max, 2, 2);
    report.add("product-family-independent",
               base_params + " units<=" + std::to_string(n_max) + " len<=2" +
                   " count=" + std::to_string(rank.input_count),
               rank.independent,
               rank.independent
                   ? ""
                   : "rank " + std::to_string(rank.rank) + " of " +
                         std::to_string(rank.input_count));
  }

  report.append(check_one_shuffled_span(alphabet, lambda,
                                        std::min(3, config.max_length), 2, 2));

  {
    std::mt19937_64 rng(config.seed ^ 0x77u);
    SampleOptions options;
    options.max_len = config.max_length;
    bool pass = true;
    std::string witness;
    for (int i = 0; i < 1000; ++i) {
      Element e = random_element(rng, with_unit, options);
      std::string text = canonical_serialize(e);
      if (parse_element(text, alphabet) != e) {
        pass = false;
        witness = text;
        break;
      }
    }
    report.add("serialize-parse-roundtrip", base_params + " samples=1000",
               pass, witness);
  }

  if (config.negative_control) {
    auto words = words_up_to_length(with_unit, 2, 1);
    std::vector<std::pair<Element, Element>> samples;
    for (const Word& a : words)
      for (const Word& b : words)
        samples.emplace_back(Element::from_word(a), Element::from_word(b));
    Rational wrong = lambda + 1;
    auto rb = check_rota_baxter(
        [](const Element& e) { return rota_baxter_operator(e); },
        [&](const Element& x, const Element& y) {
          return augmented_product(x, y, lambda, alphabet);
        },
        wrong, samples);
    std::string witness;
    if (const RotaBaxterTrial* t = rb.first_failure())
      witness = pair_witness(t->x.terms().begin()->first,
                             t->y.terms().begin()->first);
    report.add("negative-control-weight-mismatch",
               base_params + " wrong-weight=" + to_string(wrong),
               rb.all_pass(), witness);
  }

  VerifyResult result;
  result.report = std::move(report);
  result.text = format_report(result.report);
  result.all_pass = result.report.all_pass();
  return result;
}

}  // namespace qshuffle
