#include "qshuffle/error.hpp"

namespace qshuffle {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::duplicate_letter_name: return "duplicate-letter-name";
    case ErrorKind::nonpositive_degree: return "nonpositive-degree";
    case ErrorKind::invalid_letter_name: return "invalid-letter-name";
    case ErrorKind::pairing_conflict: return "pairing-conflict";
    case ErrorKind::unknown_letter: return "unknown-letter";
    case ErrorKind::alphabet_mismatch: return "alphabet-mismatch";
    case ErrorKind::unit_letter_in_operand: return "unit-letter-in-operand";
    case ErrorKind::empty_word_operand: return "empty-word-operand";
    case ErrorKind::zero_entry_in_index: return "zero-entry-in-index";
    case ErrorKind::zero_lambda_inverse: return "zero-lambda-inverse";
    case ErrorKind::empty_input: return "empty-input";
    case ErrorKind::syntax_error: return "syntax-error";
    case ErrorKind::type_error: return "type-error";
    case ErrorKind::unknown_function: return "unknown-function";
    case ErrorKind::config_error: return "config-error";
  }
  return "error";
}

}  // namespace qshuffle
