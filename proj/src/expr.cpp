#include "qshuffle/expr.hpp"

#include <cctype>

#include "qshuffle/error.hpp"
#include "qshuffle/products.hpp"
#include "qshuffle/rota_baxter.hpp"

namespace qshuffle {

namespace {

enum class Tok {
  end,
  integer,
  ident,
  plus,
  minus,
  star,
  slash,
  lparen,
  rparen,
  lbracket,
  rbracket,
  comma,
};

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t line = 1, column = 1;
};

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::end: return "end of input";
    case Tok::integer: return "integer";
    case Tok::ident: return "name";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::slash: return "'/'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::comma: return "','";
  }
  return "token";
}

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        advance();
      t.kind = Tok::integer;
      t.text = text_.substr(start, pos_ - start);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        advance();
      t.kind = Tok::ident;
      t.text = text_.substr(start, pos_ - start);
      return t;
    }
    advance();
    switch (c) {
      case '+': t.kind = Tok::plus; return t;
      case '-': t.kind = Tok::minus; return t;
      case '*': t.kind = Tok::star; return t;
      case '/': t.kind = Tok::slash; return t;
      case '(': t.kind = Tok::lparen; return t;
      case ')': t.kind = Tok::rparen; return t;
      case '[': t.kind = Tok::lbracket; return t;
      case ']': t.kind = Tok::rbracket; return t;
      case ',': t.kind = Tok::comma; return t;
      default:
        throw SyntaxError("unexpected character at line " +
                              std::to_string(t.line) + ", column " +
                              std::to_string(t.column),
                          t.line, t.column);
    }
  }

private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1, column_ = 1;
};

class Parser {
public:
  explicit Parser(const std::string& text) : lexer_(text) { shift(); }

  ExprPtr parse() {
    ExprPtr e = parse_expr();
    expect(Tok::end, "expected end of expression");
    return e;
  }

private:
  void shift() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(expected + ", got " + describe(current_.kind) +
                          " at line " + std::to_string(current_.line) +
                          ", column " + std::to_string(current_.column),
                      current_.line, current_.column);
  }

  Token expect(Tok kind, const std::string& expected) {
    if (current_.kind != kind) fail(expected);
    Token t = current_;
    shift();
    return t;
  }

  bool accept(Tok kind) {
    if (current_.kind != kind) return false;
    shift();
    return true;
  }

  template <typename Node>
  ExprPtr wrap(Node&& node, std::size_t line, std::size_t column) {
    auto e = std::make_unique<Expr>();
    e->node = std::forward<Node>(node);
    e->line = line;
    e->column = column;
    return e;
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (current_.kind == Tok::plus || current_.kind == Tok::minus) {
      char op = current_.kind == Tok::plus ? '+' : '-';
      Token t = current_;
      shift();
      ExprPtr rhs = parse_term();
      lhs = wrap(Binary{op, std::move(lhs), std::move(rhs)}, t.line, t.column);
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_unary();
    while (current_.kind == Tok::star) {
      Token t = current_;
      shift();
      ExprPtr rhs = parse_unary();
      lhs = wrap(Binary{'*', std::move(lhs), std::move(rhs)}, t.line, t.column);
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (current_.kind == Tok::minus) {
      Token t = current_;
      shift();
      return wrap(Unary{'-', parse_unary()}, t.line, t.column);
    }
    return parse_primary();
  }

  Rational parse_rational_tail(const Token& first) {
    std::string num = first.text;
    std::string den = "1";
    if (accept(Tok::slash)) {
      Token d = expect(Tok::integer, "expected denominator digits");
      den = d.text;
    }
    mpz_class dz(den, 10);
    if (dz == 0)
      throw SyntaxError("zero denominator at line " +
                            std::to_string(first.line) + ", column " +
                            std::to_string(first.column),
                        first.line, first.column);
    Rational r(mpz_class(num, 10), dz);
    r.canonicalize();
    return r;
  }

  ExprPtr parse_word(const Token& open) {
    std::vector<std::string> names;
    if (current_.kind == Tok::ident && current_.text == "e") {
      shift();
      expect(Tok::rbracket, "expected ']' after 'e'");
      return wrap(WordLit{std::move(names)}, open.line, open.column);
    }
    while (true) {
      if (current_.kind == Tok::ident) {
        names.push_back(current_.text);
        shift();
      } else if (current_.kind == Tok::integer && current_.text == "1") {
        names.push_back("1");
        shift();
      } else {
        fail("expected letter name");
      }
      if (accept(Tok::comma)) continue;
      expect(Tok::rbracket, "expected ']' or ','");
      break;
    }
    return wrap(WordLit{std::move(names)}, open.line, open.column);
  }

  IndexSequence parse_sequence() {
    // (i1,i2,...) with or without the surrounding parens already consumed by
    // the caller's '('; an inner '(' starts a parenthesized sequence
    IndexSequence seq;
    bool inner = accept(Tok::lparen);
    if ((inner && current_.kind == Tok::rparen) ||
        (!inner && current_.kind == Tok::rparen)) {
      // empty sequence: () or ( )
    } else {
      while (true) {
        Token t = expect(Tok::integer, "expected index entry");
        if (t.text.size() > 6)
          throw SyntaxError("index entry too large at line " +
                                std::to_string(t.line) + ", column " +
                                std::to_string(t.column),
                            t.line, t.column);
        seq.entries.push_back(std::stoi(t.text));
        if (!accept(Tok::comma)) break;
      }
    }
    if (inner) expect(Tok::rparen, "expected ')' closing the sequence");
    return seq;
  }

  ExprPtr parse_call(const Token& name) {
    expect(Tok::lparen, "expected '(' after operation name");
    Call call;
    call.fn = name.text;
    if (call.fn == "oneshuf" || call.fn == "ssupp") {
      IndexSequence seq = parse_sequence();
      expect(Tok::rparen, "expected ')'");
      call.args.push_back(wrap(SeqLit{std::move(seq)}, name.line, name.column));
      return wrap(std::move(call), name.line, name.column);
    }
    if (call.fn == "Pv") {
      Token letter = expect(Tok::ident, "expected letter name");
      call.args.push_back(
          wrap(NameLit{letter.text}, letter.line, letter.column));
      expect(Tok::comma, "expected ',' after the letter");
      call.args.push_back(parse_expr());
      expect(Tok::rparen, "expected ')'");
      return wrap(std::move(call), name.line, name.column);
    }
    if (!accept(Tok::rparen)) {
      while (true) {
        call.args.push_back(parse_expr());
        if (!accept(Tok::comma)) break;
      }
      expect(Tok::rparen, "expected ')' or ','");
    }
    return wrap(std::move(call), name.line, name.column);
  }

  ExprPtr parse_primary() {
    Token t = current_;
    switch (t.kind) {
      case Tok::integer: {
        shift();
        return wrap(ScalarLit{parse_rational_tail(t)}, t.line, t.column);
      }
      case Tok::lbracket:
        shift();
        return parse_word(t);
      case Tok::ident:
        shift();
        if (current_.kind == Tok::lparen) return parse_call(t);
        fail("expected '(' after name (bare names are not values)");
      case Tok::lparen: {
        shift();
        ExprPtr e = parse_expr();
        expect(Tok::rparen, "expected ')'");
        return e;
      }
      default:
        fail("expected a value");
    }
  }

  Lexer lexer_;
  Token current_;
};

}  // namespace

ExprPtr parse_expression(const std::string& text) {
  Parser parser(text);
  return parser.parse();
}

namespace {

[[noreturn]] void eval_fail(ErrorKind kind, const std::string& msg,
                            const Expr& at) {
  throw Error(kind, msg + " at line " + std::to_string(at.line) +
                        ", column " + std::to_string(at.column));
}

Element as_element(const Value& v, const Expr& at) {
  if (std::holds_alternative<Element>(v)) return std::get<Element>(v);
  if (std::holds_alternative<Rational>(v))
    return std::get<Rational>(v) * Element::one();
  eval_fail(ErrorKind::type_error, "expected an element", at);
}

Rational as_scalar(const Value& v, const Expr& at) {
  if (std::holds_alternative<Rational>(v)) return std::get<Rational>(v);
  eval_fail(ErrorKind::type_error, "expected a scalar", at);
}

IndexSequence as_sequence(const Value& v, const Expr& at) {
  if (std::holds_alternative<IndexSequence>(v))
    return std::get<IndexSequence>(v);
  eval_fail(ErrorKind::type_error, "expected an index sequence", at);
}

struct Evaluator {
  const EvalConfig& config;

  Value eval(const Expr& e) {
    return std::visit([&](const auto& node) { return dispatch(node, e); },
                      e.node);
  }

  Value dispatch(const ScalarLit& lit, const Expr&) { return lit.value; }

  Value dispatch(const WordLit& lit, const Expr& e) {
    std::vector<Letter> letters;
    letters.reserve(lit.names.size());
    for (const std::string& name : lit.names) {
      if (name == "1") {
        letters.push_back(Letter::unit());
        continue;
      }
      auto l = config.alphabet->find(name);
      if (!l)
        eval_fail(ErrorKind::unknown_letter,
                  "unknown letter '" + name + "' for alphabet " +
                      config.alphabet->description(),
                  e);
      letters.push_back(*l);
    }
    return Element::from_word(Word(std::move(letters)));
  }

  Value dispatch(const SeqLit& lit, const Expr&) { return lit.seq; }

  Value dispatch(const NameLit&, const Expr& e) {
    eval_fail(ErrorKind::type_error, "bare name outside Pv", e);
  }

  Value dispatch(const Unary& u, const Expr& e) {
    Value v = eval(*u.arg);
    if (std::holds_alternative<Rational>(v))
      return Rational(-std::get<Rational>(v));
    if (std::holds_alternative<Element>(v)) return -std::get<Element>(v);
    if (std::holds_alternative<TensorSquareElement>(v))
      return -std::get<TensorSquareElement>(v);
    eval_fail(ErrorKind::type_error, "cannot negate an index sequence", e);
  }

  Value dispatch(const Binary& b, const Expr& e) {
    Value lhs = eval(*b.lhs);
    Value rhs = eval(*b.rhs);
    if (b.op == '*') return multiply(lhs, rhs, e);
    return add(lhs, rhs, b.op == '-', e);
  }

  Value multiply(const Value& lhs, const Value& rhs, const Expr& e) {
    if (std::holds_alternative<Rational>(lhs)) {
      const Rational& s = std::get<Rational>(lhs);
      if (std::holds_alternative<Rational>(rhs))
        return Rational(s * std::get<Rational>(rhs));
      if (std::holds_alternative<Element>(rhs))
        return s * std::get<Element>(rhs);
      if (std::holds_alternative<TensorSquareElement>(rhs))
        return std::get<TensorSquareElement>(rhs).scaled(s);
    }
    if (std::holds_alternative<Rational>(rhs))
      return multiply(rhs, lhs, e);
    eval_fail(ErrorKind::type_error,
              "'*' is scalar multiplication; use sh/qsh/msh/aug/conc for "
              "products",
              e);
  }

  Value add(const Value& lhs, const Value& rhs, bool subtract, const Expr& e) {
    if (std::holds_alternative<TensorSquareElement>(lhs) ||
        std::holds_alternative<TensorSquareElement>(rhs)) {
      if (!std::holds_alternative<TensorSquareElement>(lhs) ||
          !std::holds_alternative<TensorSquareElement>(rhs))
        eval_fail(ErrorKind::type_error, "cannot mix tensors with other values",
                  e);
      TensorSquareElement r = std::get<TensorSquareElement>(rhs);
      if (subtract) r = -r;
      return std::get<TensorSquareElement>(lhs) + r;
    }
    if (std::holds_alternative<Rational>(lhs) &&
        std::holds_alternative<Rational>(rhs)) {
      const Rational& a = std::get<Rational>(lhs);
      const Rational& b = std::get<Rational>(rhs);
      Rational r = subtract ? Rational(a - b) : Rational(a + b);
      return r;
    }
    Element a = as_element(lhs, e);
    Element b = as_element(rhs, e);
    return subtract ? a - b : a + b;
  }

  Value dispatch(const Call& call, const Expr& e) {
    const Alphabet& alphabet = *config.alphabet;
    const Rational& lambda = config.lambda;
    auto need_args = [&](std::size_t n) {
      if (call.args.size() != n)
        eval_fail(ErrorKind::type_error,
                  call.fn + " takes " + std::to_string(n) + " argument" +
                      (n == 1 ? "" : "s"),
                  e);
    };
    try {
      if (call.fn == "sh") {
        need_args(2);
        return shuffle(as_element(eval(*call.args[0]), e),
                       as_element(eval(*call.args[1]), e));
      }
      if (call.fn == "qsh") {
        need_args(2);
        return quasi_shuffle(as_element(eval(*call.args[0]), e),
                             as_element(eval(*call.args[1]), e), alphabet);
      }
      if (call.fn == "msh") {
        need_args(2);
        return mixable_shuffle(as_element(eval(*call.args[0]), e),
                               as_element(eval(*call.args[1]), e), lambda,
                               alphabet);
      }
      if (call.fn == "aug") {
        need_args(2);
        return augmented_product(as_element(eval(*call.args[0]), e),
                                 as_element(eval(*call.args[1]), e), lambda,
                                 alphabet);
      }
      if (call.fn == "conc") {
        need_args(2);
        return concat_product(as_element(eval(*call.args[0]), e),
                              as_element(eval(*call.args[1]), e));
      }
      if (call.fn == "P") {
        need_args(1);
        return rota_baxter_operator(as_element(eval(*call.args[0]), e));
      }
      if (call.fn == "Pv") {
        need_args(2);
        const auto* name = std::get_if<NameLit>(&call.args[0]->node);
        if (!name)
          eval_fail(ErrorKind::type_error, "Pv needs a letter name", e);
        Letter v = alphabet.require(name->name);
        return letter_prepend_operator(
            v, as_element(eval(*call.args[1]), e));
      }
      if (call.fn == "coprod") {
        need_args(1);
        return coproduct(as_element(eval(*call.args[0]), e));
      }
      if (call.fn == "counit") {
        need_args(1);
        return counit(as_element(eval(*call.args[0]), e));
      }
      if (call.fn == "antipode") {
        need_args(1);
        return antipode(as_element(eval(*call.args[0]), e),
                        HopfProduct::mixable, lambda, alphabet);
      }
      if (call.fn == "g") {
        need_args(1);
        return g_rescale(as_element(eval(*call.args[0]), e), lambda);
      }
      if (call.fn == "ginv") {
        need_args(1);
        return g_rescale_inverse(as_element(eval(*call.args[0]), e), lambda);
      }
      if (call.fn == "fwd") {
        need_args(1);
        return f_tilde(as_element(eval(*call.args[0]), e));
      }
      if (call.fn == "oneshuf") {
        need_args(1);
        return one_shuffled(as_sequence(eval(*call.args[0]), e), alphabet);
      }
      if (call.fn == "ssupp") {
        need_args(1);
        return ssupp(as_sequence(eval(*call.args[0]), e));
      }
    } catch (const SyntaxError&) {
      throw;
    } catch (const Error& err) {
      if (std::string(err.what()).find(" at line ") != std::string::npos)
        throw;
      eval_fail(err.kind(), err.what(), e);
    }
    eval_fail(ErrorKind::unknown_function,
              "unknown operation '" + call.fn + "'", e);
  }
};

}  // namespace

Value evaluate(const Expr& expr, const EvalConfig& config) {
  if (!config.alphabet)
    throw Error(ErrorKind::config_error, "no alphabet configured");
  Evaluator ev{config};
  return ev.eval(expr);
}

std::string to_string(const Value& value) {
  if (std::holds_alternative<Rational>(value))
    return to_string(std::get<Rational>(value));
  if (std::holds_alternative<Element>(value))
    return canonical_serialize(std::get<Element>(value));
  if (std::holds_alternative<TensorSquareElement>(value))
    return canonical_serialize(std::get<TensorSquareElement>(value));
  return to_string(std::get<IndexSequence>(value));
}

std::string tabulate(const Value& value) {
  if (std::holds_alternative<Element>(value)) {
    const Element& e = std::get<Element>(value);
    if (e.is_zero()) return "0\n";
    std::string out;
    for (const auto& [w, c] : e.terms())
      out += to_string(c) + "\t" + to_string(w) + "\n";
    return out;
  }
  if (std::holds_alternative<TensorSquareElement>(value)) {
    const TensorSquareElement& e = std::get<TensorSquareElement>(value);
    if (e.is_zero()) return "0\n";
    std::string out;
    for (const auto& [pair, c] : e.terms())
      out += to_string(c) + "\t" + to_string(pair.first) + "\t" +
             to_string(pair.second) + "\n";
    return out;
  }
  return to_string(value) + "\n";
}

}  // namespace qshuffle
