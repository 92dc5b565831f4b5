#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace qshuffle {

enum class ErrorKind {
  duplicate_letter_name,
  nonpositive_degree,
  invalid_letter_name,
  pairing_conflict,
  unknown_letter,
  alphabet_mismatch,
  unit_letter_in_operand,
  empty_word_operand,
  zero_entry_in_index,
  zero_lambda_inverse,
  empty_input,
  syntax_error,
  type_error,
  unknown_function,
  config_error,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

// Parse failure with a 1-based source position.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorKind::syntax_error, message), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace qshuffle
