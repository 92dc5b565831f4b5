#include "qshuffle/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "qshuffle/element.hpp"
#include "qshuffle/error.hpp"

namespace qshuffle {

namespace {

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
    return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// "e" is the empty-word literal and "1" the unit; neither may name a letter.
void require_usable_name(const std::string& name) {
  if (!valid_name(name) || name == "e" || name == "1")
    throw Error(ErrorKind::invalid_letter_name,
                "invalid letter name '" + name + "'");
}

// z<k> with k >= 1 and no leading zero
std::optional<int> stuffle_index(std::string_view name) {
  if (name.size() < 2 || name[0] != 'z') return std::nullopt;
  std::string_view digits = name.substr(1);
  if (digits[0] == '0') return std::nullopt;
  long value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    value = value * 10 + (c - '0');
    if (value > 1'000'000) return std::nullopt;
  }
  return static_cast<int>(value);
}

void sort_letters(std::vector<Letter>& letters) {
  std::sort(letters.begin(), letters.end(),
            [](const Letter& a, const Letter& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return a.name() < b.name();
            });
}

std::string letters_brief(const std::vector<Letter>& letters) {
  std::string out;
  for (const Letter& l : letters) {
    if (!out.empty()) out += ',';
    out += l.name() + ":" + std::to_string(l.degree());
  }
  return out;
}

}  // namespace

Alphabet Alphabet::make_stuffle() {
  Alphabet a;
  a.kind_ = Kind::stuffle;
  a.description_ = "stuffle";
  return a;
}

Alphabet Alphabet::make_zero(std::vector<Letter> letters) {
  Alphabet a;
  a.kind_ = Kind::zero_rule;
  for (const Letter& l : letters) {
    require_usable_name(l.name());
    if (l.degree() <= 0)
      throw Error(ErrorKind::nonpositive_degree,
                  "letter '" + l.name() + "' has degree " +
                      std::to_string(l.degree()));
    if (!a.degree_by_name_.emplace(l.name(), l.degree()).second)
      throw Error(ErrorKind::duplicate_letter_name,
                  "duplicate letter '" + l.name() + "'");
  }
  sort_letters(letters);
  a.letters_ = std::move(letters);
  a.description_ = "zero(" + letters_brief(a.letters_) + ")";
  return a;
}

Alphabet Alphabet::make_table(std::vector<Letter> letters,
                              std::vector<TableEntry> pairs) {
  Alphabet a;
  a.kind_ = Kind::table;
  for (const Letter& l : letters) {
    require_usable_name(l.name());
    if (l.degree() <= 0)
      throw Error(ErrorKind::nonpositive_degree,
                  "letter '" + l.name() + "' has degree " +
                      std::to_string(l.degree()));
    if (!a.degree_by_name_.emplace(l.name(), l.degree()).second)
      throw Error(ErrorKind::duplicate_letter_name,
                  "duplicate letter '" + l.name() + "'");
  }
  sort_letters(letters);
  a.letters_ = std::move(letters);
  for (TableEntry& entry : pairs) {
    for (const std::string* name : {&entry.a, &entry.b})
      if (!a.degree_by_name_.count(*name))
        throw Error(ErrorKind::unknown_letter,
                    "pair rule uses unknown letter '" + *name + "'");
    if (entry.value && !a.degree_by_name_.count(*entry.value))
      throw Error(ErrorKind::unknown_letter,
                  "pair rule uses unknown letter '" + *entry.value + "'");
    auto key = std::minmax(entry.a, entry.b);
    auto [it, inserted] = a.pairs_.emplace(key, entry.value);
    if (!inserted && it->second != entry.value)
      throw Error(ErrorKind::pairing_conflict,
                  "conflicting rules for [" + entry.a + "," + entry.b + "]");
  }
  a.description_ = "table(" + letters_brief(a.letters_) + ")";
  return a;
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  if (kind_ == Kind::stuffle) {
    if (auto k = stuffle_index(name)) return Letter(std::string(name), *k);
    return std::nullopt;
  }
  auto it = degree_by_name_.find(std::string(name));
  if (it == degree_by_name_.end()) return std::nullopt;
  return Letter(it->first, it->second);
}

Letter Alphabet::require(std::string_view name) const {
  if (auto l = find(name)) return *l;
  throw Error(ErrorKind::unknown_letter,
              "unknown letter '" + std::string(name) + "' in alphabet " +
                  description_);
}

bool Alphabet::contains(const Letter& l) const {
  auto found = find(l.name());
  return found && found->degree() == l.degree();
}

std::optional<Letter> Alphabet::bracket(const std::optional<Letter>& a,
                                        const std::optional<Letter>& b) const {
  if (!a || !b) return std::nullopt;
  for (const Letter* l : {&*a, &*b})
    if (!l->is_unit() && !contains(*l))
      throw Error(ErrorKind::unknown_letter,
                  "bracket operand '" + l->name() + "' not in alphabet " +
                      description_);
  if (a->is_unit()) return b;
  if (b->is_unit()) return a;
  switch (kind_) {
    case Kind::zero_rule:
      return std::nullopt;
    case Kind::stuffle: {
      int k = a->degree() + b->degree();
      return Letter("z" + std::to_string(k), k);
    }
    case Kind::table: {
      auto key = std::minmax(a->name(), b->name());
      auto it = pairs_.find(key);
      if (it == pairs_.end() || !it->second) return std::nullopt;
      return find(*it->second);
    }
  }
  return std::nullopt;
}

std::size_t Alphabet::slice_size(int degree) const {
  if (degree <= 0) return 0;
  if (kind_ == Kind::stuffle) return 1;
  std::size_t n = 0;
  for (const Letter& l : letters_)
    if (l.degree() == degree) ++n;
  return n;
}

std::vector<Letter> Alphabet::degree_slice(int degree) const {
  std::vector<Letter> out;
  if (degree <= 0) return out;
  if (kind_ == Kind::stuffle) {
    out.emplace_back("z" + std::to_string(degree), degree);
    return out;
  }
  for (const Letter& l : letters_)
    if (l.degree() == degree) out.push_back(l);
  return out;
}

std::vector<Letter> Alphabet::letters_up_to_degree(int bound) const {
  std::vector<Letter> out;
  for (int d = 1; d <= bound; ++d) {
    auto slice = degree_slice(d);
    out.insert(out.end(), slice.begin(), slice.end());
  }
  return out;
}

std::size_t Alphabet::letter_count() const {
  if (kind_ == Kind::stuffle)
    throw Error(ErrorKind::config_error, "stuffle alphabet is infinite");
  return letters_.size();
}

Letter Alphabet::letter_by_index(int i) const {
  if (i < 1)
    throw Error(ErrorKind::unknown_letter,
                "letter index " + std::to_string(i) + " out of range");
  if (kind_ == Kind::stuffle) return Letter("z" + std::to_string(i), i);
  if (static_cast<std::size_t>(i) > letters_.size())
    throw Error(ErrorKind::unknown_letter,
                "letter index " + std::to_string(i) + " out of range for " +
                    description_);
  return letters_[static_cast<std::size_t>(i) - 1];
}

void Alphabet::validate_word(const Word& w) const {
  for (const Letter& l : w.letters()) {
    if (l.is_unit()) continue;
    auto found = find(l.name());
    if (!found)
      throw Error(ErrorKind::unknown_letter,
                  "word uses unknown letter '" + l.name() + "' for alphabet " +
                      description_);
    if (found->degree() != l.degree())
      throw Error(ErrorKind::alphabet_mismatch,
                  "letter '" + l.name() + "' has degree " +
                      std::to_string(l.degree()) + " but alphabet " +
                      description_ + " declares " +
                      std::to_string(found->degree()));
  }
}

void Alphabet::validate_element(const Element& e) const {
  for (const auto& [word, coeff] : e.terms()) validate_word(word);
}

Alphabet Alphabet::parse_description(const std::string& text) {
  std::vector<Letter> letters;
  std::vector<TableEntry> entries;
  std::optional<std::vector<std::string>> builtin;
  bool saw_plain = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw Error(ErrorKind::config_error,
                "alphabet description line " + std::to_string(lineno) + ": " +
                    msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "letter") {
      if (tok.size() != 3) fail("expected: letter <name> <degree>");
      int degree = 0;
      try {
        degree = std::stoi(tok[2]);
      } catch (const std::exception&) {
        fail("bad degree '" + tok[2] + "'");
      }
      letters.emplace_back(tok[1], degree);
      saw_plain = true;
    } else if (tok[0] == "pair") {
      if (tok.size() != 5 || tok[3] != "=")
        fail("expected: pair <a> <b> = <c|0>");
      TableEntry e;
      e.a = tok[1];
      e.b = tok[2];
      if (tok[4] != "0") e.value = tok[4];
      entries.push_back(e);
      saw_plain = true;
    } else if (tok[0] == "builtin") {
      if (builtin) fail("multiple builtin directives");
      builtin = std::vector<std::string>(tok.begin() + 1, tok.end());
    } else {
      fail("unknown directive '" + tok[0] + "'");
    }
  }
  if (builtin && saw_plain)
    throw Error(ErrorKind::config_error,
                "builtin directive cannot be mixed with letter/pair lines");
  if (builtin) {
    if (builtin->empty())
      throw Error(ErrorKind::config_error, "builtin directive needs a name");
    if ((*builtin)[0] == "stuffle") {
      if (builtin->size() != 1)
        throw Error(ErrorKind::config_error,
                    "builtin stuffle takes no arguments");
      return make_stuffle();
    }
    if ((*builtin)[0] == "zero") {
      std::vector<Letter> zl;
      for (std::size_t i = 1; i < builtin->size(); ++i) {
        const std::string& spec = (*builtin)[i];
        auto colon = spec.find(':');
        if (colon == std::string::npos)
          throw Error(ErrorKind::config_error,
                      "builtin zero expects <name>:<degree>, got '" + spec +
                          "'");
        int degree = 0;
        try {
          degree = std::stoi(spec.substr(colon + 1));
        } catch (const std::exception&) {
          throw Error(ErrorKind::config_error,
                      "bad degree in '" + spec + "'");
        }
        zl.emplace_back(spec.substr(0, colon), degree);
      }
      if (zl.empty())
        throw Error(ErrorKind::config_error,
                    "builtin zero needs at least one letter");
      return make_zero(std::move(zl));
    }
    throw Error(ErrorKind::config_error,
                "unknown builtin '" + (*builtin)[0] + "'");
  }
  if (!saw_plain)
    throw Error(ErrorKind::empty_input, "alphabet description has no directives");
  return make_table(std::move(letters), std::move(entries));
}

Alphabet Alphabet::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::config_error,
                "cannot open alphabet file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_description(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

CheckReport check_hoffman_axioms(const Alphabet& alphabet, int degree_bound) {
  CheckReport report;
  const std::string params =
      "alphabet=" + alphabet.description() +
      " degree<=" + std::to_string(degree_bound);
  std::vector<Letter> pool = alphabet.letters_up_to_degree(degree_bound);

  auto show = [](const std::optional<Letter>& l) -> std::string {
    return l ? l->name() : std::string("0");
  };

  {
    bool pass = true;
    std::string witness;
    std::vector<std::optional<Letter>> sides;
    sides.push_back(std::nullopt);
    sides.emplace_back(Letter::unit());
    for (const Letter& l : pool) sides.emplace_back(l);
    for (const auto& s : sides) {
      if (alphabet.bracket(std::nullopt, s) || alphabet.bracket(s, std::nullopt)) {
        pass = false;
        witness = "zero bracket with '" + show(s) + "' not absorbed";
        break;
      }
    }
    report.add("bracket-zero-absorbs", params, pass, witness);
  }

  {
    bool pass = true;
    std::string witness;
    for (const Letter& a : pool) {
      for (const Letter& b : pool) {
        auto ab = alphabet.bracket(a, b);
        auto ba = alphabet.bracket(b, a);
        if (ab != ba) {
          pass = false;
          witness = "[" + a.name() + "," + b.name() + "]=" + show(ab) +
                    " but [" + b.name() + "," + a.name() + "]=" + show(ba);
          break;
        }
      }
      if (!pass) break;
    }
    report.add("bracket-commutative", params, pass, witness);
  }

  {
    bool pass = true;
    std::string witness;
    for (const Letter& a : pool) {
      for (const Letter& b : pool) {
        for (const Letter& c : pool) {
          auto left = alphabet.bracket(alphabet.bracket(a, b), c);
          auto right = alphabet.bracket(a, alphabet.bracket(b, c));
          if (left != right) {
            pass = false;
            witness = "[[" + a.name() + "," + b.name() + "]," + c.name() +
                      "]=" + show(left) + " but [" + a.name() + ",[" +
                      b.name() + "," + c.name() + "]]=" + show(right);
            break;
          }
        }
        if (!pass) break;
      }
      if (!pass) break;
    }
    report.add("bracket-associative", params, pass, witness);
  }

  {
    bool pass = true;
    std::string witness;
    for (const Letter& a : pool) {
      for (const Letter& b : pool) {
        auto ab = alphabet.bracket(a, b);
        if (ab && ab->degree() != a.degree() + b.degree()) {
          pass = false;
          witness = "[" + a.name() + "," + b.name() + "]=" + ab->name() +
                    " has degree " + std::to_string(ab->degree()) + " != " +
                    std::to_string(a.degree()) + "+" +
                    std::to_string(b.degree());
          break;
        }
      }
      if (!pass) break;
    }
    report.add("bracket-degree-additive", params, pass, witness);
  }

  return report;
}

}  // namespace qshuffle
