#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "qshuffle/alphabet.hpp"
#include "qshuffle/error.hpp"
#include "qshuffle/expr.hpp"
#include "qshuffle/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

qshuffle::Alphabet resolve_alphabet(const std::string& spec) {
  using qshuffle::Alphabet;
  using qshuffle::Error;
  using qshuffle::ErrorKind;
  using qshuffle::Letter;
  if (spec == "builtin:stuffle") return Alphabet::make_stuffle();
  if (spec == "builtin:zero")
    return Alphabet::make_zero({Letter("x", 1), Letter("y", 2)});
  const std::string zero_prefix = "builtin:zero:";
  if (spec.rfind(zero_prefix, 0) == 0) {
    std::vector<Letter> letters;
    std::string rest = spec.substr(zero_prefix.size());
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t comma = rest.find(',', start);
      std::string item = rest.substr(
          start, comma == std::string::npos ? std::string::npos
                                            : comma - start);
      std::size_t colon = item.find(':');
      if (item.empty() || colon == std::string::npos)
        throw Error(ErrorKind::config_error,
                    "builtin:zero letters are <name>:<degree>, got '" + item +
                        "'");
      int degree = 0;
      try {
        degree = std::stoi(item.substr(colon + 1));
      } catch (const std::exception&) {
        throw Error(ErrorKind::config_error,
                    "bad degree in '" + item + "'");
      }
      letters.emplace_back(item.substr(0, colon), degree);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return Alphabet::make_zero(std::move(letters));
  }
  if (spec.rfind("builtin:", 0) == 0)
    throw Error(ErrorKind::config_error, "unknown builtin alphabet '" + spec +
                                             "'");
  return Alphabet::from_file(spec);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact tensor-word algebra: shuffle, quasi-shuffle and weighted "
      "mixable shuffle products, the unit-prepend operator, coproduct "
      "machinery, and a self-verification suite."};
  app.name("qsh");

  std::string alphabet_spec = "builtin:stuffle";
  std::string lambda_text = "1";
  int max_degree = 5;
  int max_length = 4;
  std::uint64_t seed = 42;
  std::vector<std::string> evals;
  bool verify = false;
  bool negative_control = false;
  std::string format = "canonical";

  app.add_option("--alphabet", alphabet_spec,
                 "alphabet description file, or builtin:stuffle, "
                 "builtin:zero, builtin:zero:<name:deg,...>")
      ->capture_default_str();
  app.add_option("--lambda", lambda_text, "weight, as p or p/q")
      ->capture_default_str();
  app.add_option("--max-degree", max_degree,
                 "degree window for the verification suite")
      ->capture_default_str();
  app.add_option("--max-length", max_length,
                 "word length window for the verification suite")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for subsampled check windows")
      ->capture_default_str();
  app.add_option("--eval", evals, "expression to evaluate (repeatable)")
      ->allow_extra_args(false);
  app.add_flag("--verify", verify, "run the verification suite");
  app.add_flag("--negative-control", negative_control,
               "add a deliberately failing row to the suite");
  app.add_option("--format", format, "canonical or tabular")
      ->check(CLI::IsMember({"canonical", "tabular"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  using namespace qshuffle;

  Alphabet alphabet = Alphabet::make_stuffle();
  Rational lambda = 1;
  try {
    alphabet = resolve_alphabet(alphabet_spec);
    lambda = parse_rational(lambda_text);
    if (max_degree < 0 || max_length < 0)
      throw Error(ErrorKind::config_error, "windows must be nonnegative");
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what()
              << "\n";
    return kExitUsage;
  }

  if (evals.empty() && !verify) {
    std::cerr << "nothing to do: pass --eval or --verify (see --help)\n";
    return kExitUsage;
  }

  for (const std::string& text : evals) {
    try {
      ExprPtr expr = parse_expression(text);
      EvalConfig config{&alphabet, lambda};
      Value value = evaluate(*expr, config);
      if (format == "tabular")
        std::cout << tabulate(value);
      else
        std::cout << to_string(value) << "\n";
    } catch (const Error& e) {
      std::cerr << "error (" << to_string(e.kind()) << "): " << e.what()
                << "\n";
      return kExitUsage;
    }
  }

  if (verify) {
    RunConfig config;
    config.alphabet = alphabet;
    config.lambda = lambda;
    config.max_degree = max_degree;
    config.max_length = max_length;
    config.seed = seed;
    config.negative_control = negative_control;
    VerifyResult result = run_verification_suite(config);
    std::cout << result.text;
    std::cout << (result.all_pass ? "all checks passed\n"
                                  : "some checks FAILED\n");
    return result.all_pass ? kExitOk : kExitCheckFailure;
  }

  return kExitOk;
}
