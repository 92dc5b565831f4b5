// Integration gate: every release claim gets one pass/fail line. Exit code
// zero only when every criterion holds. argv[1] (optional) is the CLI binary
// used by the determinism criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <qshuffle/basis.hpp>
#include <qshuffle/error.hpp>
#include <qshuffle/expr.hpp>
#include <qshuffle/hopf.hpp>
#include <qshuffle/linalg.hpp>
#include <qshuffle/products.hpp>
#include <qshuffle/rota_baxter.hpp>
#include <qshuffle/sampling.hpp>
#include <qshuffle/structure.hpp>
#include <qshuffle/verify.hpp>

using namespace qshuffle;

namespace {

int failures = 0;

// Runs one criterion; the lambda returns an empty string on success and a
// short witness otherwise. Exceptions count as failures.
void criterion(const std::string& name,
               const std::function<std::string()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string witness;
  try {
    witness = body();
  } catch (const std::exception& e) {
    witness = std::string("exception: ") + e.what();
  }
  auto elapsed = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.1fs", elapsed);
  if (witness.empty()) {
    std::cout << "PASS " << name << " (" << timing << ")\n";
  } else {
    ++failures;
    std::cout << "FAIL " << name << " (" << timing << "): " << witness << "\n";
  }
  std::cout.flush();
}

Word unit_word(int n) {
  return Word(std::vector<Letter>(static_cast<std::size_t>(n), Letter::unit()));
}

std::vector<Rational> lambda_set(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(parse_rational(t));
  return out;
}

std::string run_cli(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  out += "\n<exit " + std::to_string(status) + ">";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  criterion("product-recursion-matches-enumeration", [] {
    // both product implementations on every word pair of total length <= 7
    // over a two-letter alphabet with a nontrivial pairing, plus the unit
    Alphabet two = Alphabet::make_table({Letter("x", 1), Letter("y", 2)},
                                        {{"x", "x", "y"}});
    std::vector<Letter> pool{Letter::unit(), Letter("x", 1), Letter("y", 2)};
    auto lambdas = lambda_set({"0", "1", "-1", "2", "3/7"});
    for (int la = 0; la <= 7; ++la)
      for (int lb = 0; la + lb <= 7; ++lb)
        for (const Word& a : words_up_to_length(pool, la, la))
          for (const Word& b : words_up_to_length(pool, lb, lb)) {
            if (shuffle_explicit(a, b) != shuffle_recursive(a, b))
              return "shuffle mismatch on " + to_string(a) + ", " +
                     to_string(b);
            for (const Rational& lam : lambdas)
              if (mixable_shuffle_explicit(a, b, lam, two) !=
                  mixable_shuffle_recursive(a, b, lam, two))
                return "mixable mismatch at lambda=" + to_string(lam) +
                       " on " + to_string(a) + ", " + to_string(b);
          }
    return std::string();
  });

  criterion("quasi-shuffle-equals-weight-one-mixable", [] {
    // the identity embedding of unit-free words carries the quasi-shuffle
    // onto the weight-one mixable product
    Alphabet st = Alphabet::make_stuffle();
    std::vector<Letter> pool{Letter("z1", 1), Letter("z2", 2),
                             Letter("z3", 3), Letter("z4", 4)};
    for (int la = 0; la <= 6; ++la)
      for (int lb = 0; la + lb <= 6; ++lb)
        for (const Word& a : words_up_to_length(pool, la, la))
          for (const Word& b : words_up_to_length(pool, lb, lb)) {
            Element ea = Element::from_word(a), eb = Element::from_word(b);
            if (f_tilde(quasi_shuffle(a, b, st)) !=
                mixable_shuffle(f_tilde(ea), f_tilde(eb), 1, st))
              return "mismatch on " + to_string(a) + ", " + to_string(b);
          }
    return std::string();
  });

  criterion("rota-baxter-identity-and-negative-control", [] {
    Alphabet st = Alphabet::make_stuffle();
    // exhaustive window: all pairs of two-letter words, each of length 1..4
    std::vector<Letter> plain2{Letter("z1", 1), Letter("z2", 2)};
    std::vector<std::pair<Element, Element>> samples;
    for (const Word& a : words_up_to_length(plain2, 4, 1))
      for (const Word& b : words_up_to_length(plain2, 4, 1))
        samples.emplace_back(Element::from_word(a), Element::from_word(b));
    // plus a deterministic slice of the pairs whose operands carry units
    std::vector<Letter> pool{Letter::unit(), Letter("z1", 1), Letter("z2", 2)};
    std::vector<Element> unital;
    for (const Word& w : words_up_to_length(pool, 4, 1))
      unital.push_back(Element::from_word(w));
    std::vector<std::pair<Element, Element>> sliced;
    for (std::size_t k = 0; k < unital.size() * unital.size(); k += 23)
      sliced.emplace_back(unital[k / unital.size()],
                          unital[k % unital.size()]);

    auto unit_op = [](const Element& e) { return rota_baxter_operator(e); };
    for (const Rational& lam : lambda_set({"0", "1", "-1", "5/3"})) {
      // the identity holds for both the carrier product (heads multiply)
      // and the mixable product itself
      auto carrier = [&](const Element& a, const Element& b) {
        return augmented_product(a, b, lam, st);
      };
      auto mix = [&](const Element& a, const Element& b) {
        return mixable_shuffle(a, b, lam, st);
      };
      for (const auto* window : {&samples, &sliced}) {
        RotaBaxterCheckReport r =
            check_rota_baxter(unit_op, carrier, lam, *window);
        if (!r.all_pass())
          return "unit-prepend fails at weight " + to_string(lam) + " on " +
                 canonical_serialize(r.first_failure()->x);
      }
      if (!check_rota_baxter(unit_op, mix, lam, samples).all_pass())
        return "unit-prepend fails for the mixable product at weight " +
               to_string(lam);
    }

    // letter prepend against the plain shuffle at weight zero, unit-free
    std::vector<Letter> plain{Letter("z1", 1), Letter("z2", 2)};
    std::vector<std::pair<Element, Element>> unit_free;
    for (const Word& a : words_up_to_length(plain, 4, 0))
      for (const Word& b : words_up_to_length(plain, 4, 0))
        unit_free.emplace_back(Element::from_word(a), Element::from_word(b));
    auto vop = [&](const Element& e) {
      return letter_prepend_operator(Letter("z1", 1), e);
    };
    auto sh = [](const Element& a, const Element& b) { return shuffle(a, b); };
    if (!check_rota_baxter(vop, sh, 0, unit_free).all_pass())
      return std::string("letter-prepend fails at weight zero");

    // the checker must reject a deliberately wrong weight
    Rational lam = 1, wrong = 2;
    std::vector<std::pair<Element, Element>> small(samples.begin(),
                                                   samples.begin() + 512);
    auto prod = [&](const Element& a, const Element& b) {
      return mixable_shuffle(a, b, lam, st);
    };
    if (check_rota_baxter(unit_op, prod, wrong, small).all_pass())
      return std::string("wrong weight went undetected");
    return std::string();
  });

  criterion("hopf-laws-quasi-and-mixable", [] {
    Alphabet st = Alphabet::make_stuffle();
    CheckReport quasi = check_bialgebra(HopfProduct::quasi_shuffle, 1, st, 5);
    for (const CheckRow& row : quasi.rows)
      if (!row.pass) return row.name + ": " + row.witness;
    for (const Rational& lam : lambda_set({"0", "1", "-1", "3/2"})) {
      CheckReport mix = check_bialgebra(HopfProduct::mixable, lam, st, 4);
      for (const CheckRow& row : mix.rows)
        if (!row.pass)
          return row.name + " at lambda=" + to_string(lam) + ": " +
                 row.witness;
    }
    return std::string();
  });

  criterion("rescaling-intertwines-weights", [] {
    Alphabet st = Alphabet::make_stuffle();
    std::vector<Letter> pool{Letter::unit(), Letter("z1", 1), Letter("z2", 2)};
    for (const Rational& lam : lambda_set({"2", "-1", "3/5"}))
      for (int la = 0; la <= 6; ++la)
        for (int lb = 0; la + lb <= 6; ++lb)
          for (const Word& a : words_up_to_length(pool, la, la))
            for (const Word& b : words_up_to_length(pool, lb, lb)) {
              Element lhs =
                  g_rescale(mixable_shuffle_recursive(a, b, lam, st), lam);
              Element rhs = mixable_shuffle(
                  g_rescale(Element::from_word(a), lam),
                  g_rescale(Element::from_word(b), lam), 1, st);
              if (lhs != rhs)
                return "mismatch at lambda=" + to_string(lam) + " on " +
                       to_string(a) + ", " + to_string(b);
            }
    return std::string();
  });

  criterion("unit-power-closed-form-and-weight-buckets", [] {
    Alphabet st = Alphabet::make_stuffle();
    auto lambdas = lambda_set({"0", "1", "-1", "2", "5/2"});
    for (int m = 0; m <= 4; ++m)
      for (const IndexSequence& s : positive_sequences(2, 3)) {
        for (const Rational& lam : lambdas)
          if (unit_power_product(m, s, lam, st) !=
              unit_power_shuffle_sum(m, s, lam, st))
            return "aggregate mismatch at m=" + std::to_string(m) + " I=" +
                   to_string(s) + " lambda=" + to_string(lam);
        // per-power buckets pin each binomial coefficient independently of
        // the weight, so no cancellation between powers can hide an error
        Word y = word_from_indices(s, st);
        auto buckets = mixable_shuffle_lambda_graded(unit_word(m), y, st);
        std::size_t expected =
            static_cast<std::size_t>(
                std::min<std::size_t>(static_cast<std::size_t>(m),
                                      s.length())) + 1;
        if (buckets.size() != expected)
          return "bucket count " + std::to_string(buckets.size()) + " at m=" +
                 std::to_string(m) + " I=" + to_string(s);
        for (const auto& [i, part] : buckets) {
          Element expect =
              binomial(static_cast<unsigned>(s.length()),
                       static_cast<unsigned>(i)) *
              shuffle_explicit(unit_word(m - i), y);
          if (part != expect)
            return "bucket " + std::to_string(i) + " wrong at m=" +
                   std::to_string(m) + " I=" + to_string(s);
        }
      }
    return std::string();
  });

  criterion("unit-power-family-linearly-independent", [] {
    Alphabet st = Alphabet::make_stuffle();
    for (const Rational& lam : lambda_set({"0", "1"})) {
      RankReport r = check_linear_disjointness(st, lam, 3, 2, 2);
      if (!r.independent)
        return "rank " + std::to_string(r.rank) + " of " +
               std::to_string(r.input_count) + " at lambda=" + to_string(lam);
    }
    return std::string();
  });

  criterion("one-shuffled-span-equality", [] {
    Alphabet st = Alphabet::make_stuffle();
    CheckReport r = check_one_shuffled_span(st, 1, 3, 2, 2);
    for (const CheckRow& row : r.rows)
      if (!row.pass) return row.name + ": " + row.witness;
    // frozen expansion of one mixed class
    IndexSequence s;
    s.entries = {2, 0, 1};
    Element o = one_shuffled(s, st);
    Element expect = parse_element("[1,z2,z1] + [z2,1,z1] + [z2,z1,1]", st);
    if (o != expect) return "unexpected expansion: " + canonical_serialize(o);
    return std::string();
  });

  criterion("verification-output-deterministic", [&cli] {
    if (cli.empty()) {
      // library-level fallback when the binary path is not supplied
      RunConfig config;
      config.max_degree = 3;
      config.max_length = 3;
      VerifyResult a = run_verification_suite(config);
      VerifyResult b = run_verification_suite(config);
      if (!a.all_pass) return std::string("suite failed");
      if (a.text != b.text) return std::string("library reports differ");
      return std::string();
    }
    std::string cmd = cli +
                      " --verify --max-degree 3 --max-length 3 --seed 42 2>&1";
    std::string first = run_cli(cmd);
    std::string second = run_cli(cmd);
    if (first.find("<exit 0>") == std::string::npos)
      return "cli exited nonzero: ..." + first.substr(
                 first.size() > 160 ? first.size() - 160 : 0);
    if (first != second) return std::string("cli runs differ byte-for-byte");
    return std::string();
  });

  criterion("serialization-roundtrip-and-fuzz", [] {
    Alphabet st = Alphabet::make_stuffle();
    std::mt19937_64 rng(424242);
    std::vector<Letter> pool{Letter::unit(), Letter("z1", 1), Letter("z2", 2),
                             Letter("z3", 3)};
    SampleOptions options;
    for (int i = 0; i < 1000; ++i) {
      Element e = random_element(rng, pool, options);
      Element back = parse_element(canonical_serialize(e), st);
      if (back != e) return "roundtrip broke at sample " + std::to_string(i);
    }
    for (int i = 0; i < 2000; ++i) {
      std::string text = random_bytes(rng, 48);
      try {
        parse_element(text, st);
      } catch (const Error&) {
      }
      try {
        ExprPtr ast = parse_expression(text);
        EvalConfig config;
        config.alphabet = &st;
        evaluate(*ast, config);
      } catch (const Error&) {
      }
    }
    std::uniform_int_distribution<int> byte(32, 126);
    for (int i = 0; i < 1000; ++i) {
      std::string text =
          canonical_serialize(random_element(rng, pool, options));
      if (!text.empty()) {
        std::uniform_int_distribution<std::size_t> pos(0, text.size() - 1);
        text[pos(rng)] = static_cast<char>(byte(rng));
      }
      try {
        parse_element(text, st);
      } catch (const Error&) {
      }
    }
    return std::string();
  });

  if (failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria FAILED\n";
  return 1;
}
