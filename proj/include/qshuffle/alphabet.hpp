#pragma once
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qshuffle/letter.hpp"
#include "qshuffle/report.hpp"
#include "qshuffle/word.hpp"

namespace qshuffle {

class Element;

// Description file format, one directive per line, '#' starts a comment:
//
//   letter <name> <degree>
//   pair <a> <b> = <c>        bracket of two letters, "0" for the zero value
//   builtin stuffle           index alphabet z1, z2, ... with [zi,zj] = z(i+j)
//   builtin zero <n:d> ...    listed letters, every bracket zero
//
// A builtin line must be the only directive. Unlisted pairs of a table
// alphabet default to zero. The bracket must satisfy, on nonzero values:
// commutativity, associativity, and degree additivity; check_hoffman_axioms
// reports violations rather than throwing so that broken tables can still be
// constructed and inspected.
class Alphabet {
public:
  enum class Kind { table, stuffle, zero_rule };

  struct TableEntry {
    std::string a, b;
    std::optional<std::string> value;  // nullopt encodes the zero bracket
  };

  static Alphabet make_stuffle();
  static Alphabet make_zero(std::vector<Letter> letters);
  static Alphabet make_table(std::vector<Letter> letters,
                             std::vector<TableEntry> pairs);
  static Alphabet parse_description(const std::string& text);
  static Alphabet from_file(const std::string& path);

  Kind kind() const { return kind_; }
  const std::string& description() const { return description_; }

  std::optional<Letter> find(std::string_view name) const;
  Letter require(std::string_view name) const;
  bool contains(const Letter& l) const;

  // Bracket on the unital span: either side absent means the zero value and
  // absorbs; the unit letter is neutral; two alphabet letters multiply by the
  // pairing rule. Unknown letters are rejected.
  std::optional<Letter> bracket(const std::optional<Letter>& a,
                                const std::optional<Letter>& b) const;

  std::size_t slice_size(int degree) const;
  std::vector<Letter> degree_slice(int degree) const;
  std::vector<Letter> letters_up_to_degree(int bound) const;
  std::size_t letter_count() const;  // finite alphabets only

  // i-th letter (1-based) in the (degree, name) enumeration; for the stuffle
  // alphabet this is z_i.
  Letter letter_by_index(int i) const;

  void validate_word(const Word& w) const;
  void validate_element(const Element& e) const;

private:
  Alphabet() = default;

  Kind kind_ = Kind::table;
  std::string description_;
  std::vector<Letter> letters_;  // sorted by (degree, name); empty for stuffle
  std::map<std::string, int> degree_by_name_;
  // keys are name pairs sorted ascending; absent key means zero bracket
  std::map<std::pair<std::string, std::string>, std::optional<std::string>>
      pairs_;
};

// Axioms of the pairing, checked over all letters of degree <= degree_bound:
// zero absorption, commutativity, associativity, and degree additivity on
// nonzero brackets.
CheckReport check_hoffman_axioms(const Alphabet& alphabet, int degree_bound);

}  // namespace qshuffle
