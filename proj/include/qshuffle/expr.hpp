#pragma once
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qshuffle/alphabet.hpp"
#include "qshuffle/element.hpp"
#include "qshuffle/hopf.hpp"
#include "qshuffle/structure.hpp"

namespace qshuffle {

// Expression grammar:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*            '*' is scalar multiplication
//   unary   := '-' unary | primary
//   primary := INT ['/' INT]                  rational literal
//            | '[' 'e' ']'                    empty word
//            | '[' name (',' name)* ']'       word, unit letter written 1
//            | IDENT '(' args ')'             operation call
//            | '(' expr ')'
//
// Pv takes a bare letter name as its first argument; oneshuf and ssupp take
// an integer sequence, written (2,0,1) with or without the inner parens.
struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct ScalarLit {
  Rational value;
};
struct WordLit {
  std::vector<std::string> names;  // empty vector = empty word
};
struct SeqLit {
  IndexSequence seq;
};
struct NameLit {
  std::string name;
};
struct Unary {
  char op;
  ExprPtr arg;
};
struct Binary {
  char op;
  ExprPtr lhs, rhs;
};
struct Call {
  std::string fn;
  std::vector<ExprPtr> args;
};

struct Expr {
  std::variant<ScalarLit, WordLit, SeqLit, NameLit, Unary, Binary, Call> node;
  std::size_t line = 1, column = 1;
};

ExprPtr parse_expression(const std::string& text);

struct EvalConfig {
  const Alphabet* alphabet = nullptr;
  Rational lambda = 1;
};

using Value =
    std::variant<Rational, Element, TensorSquareElement, IndexSequence>;

Value evaluate(const Expr& expr, const EvalConfig& config);

// canonical_serialize by payload type; scalars print bare, sequences "(..)".
std::string to_string(const Value& value);

// One line per term for elements and tensors, tab separated; scalars and
// sequences produce a single line.
std::string tabulate(const Value& value);

}  // namespace qshuffle
