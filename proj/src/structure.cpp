#include "qshuffle/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qshuffle/error.hpp"
#include "qshuffle/linalg.hpp"
#include "qshuffle/products.hpp"
#include "qshuffle/rota_baxter.hpp"

namespace qshuffle {

std::size_t IndexSequence::zero_count() const {
  std::size_t n = 0;
  for (int e : entries)
    if (e == 0) ++n;
  return n;
}

bool IndexSequence::all_positive() const {
  for (int e : entries)
    if (e <= 0) return false;
  return true;
}

bool IndexSequence::operator<(const IndexSequence& other) const {
  if (entries.size() != other.entries.size())
    return entries.size() < other.entries.size();
  return entries < other.entries;
}

std::string to_string(const IndexSequence& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seq.entries[i]);
  }
  out += ')';
  return out;
}

IndexSequence ssupp(const IndexSequence& seq) {
  IndexSequence out;
  for (int e : seq.entries) {
    if (e < 0)
      throw Error(ErrorKind::config_error,
                  "index entries must be nonnegative: " + to_string(seq));
    if (e > 0) out.entries.push_back(e);
  }
  return out;
}

Word word_from_indices(const IndexSequence& seq, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  letters.reserve(seq.entries.size());
  for (int e : seq.entries) {
    if (e < 0)
      throw Error(ErrorKind::config_error,
                  "index entries must be nonnegative: " + to_string(seq));
    letters.push_back(e == 0 ? Letter::unit() : alphabet.letter_by_index(e));
  }
  return Word(std::move(letters));
}

Element f_tilde(const Element& e) {
  for (const auto& [w, c] : e.terms())
    if (w.contains_unit())
      throw Error(ErrorKind::unit_letter_in_operand,
                  "embedding domain is unit-free: " + to_string(w));
  return e;
}

Element g_rescale(const Element& e, const Rational& lambda) {
  Element out;
  for (const auto& [w, c] : e.terms())
    out.add_term(w, c * rational_pow(lambda, static_cast<unsigned>(w.length())));
  return out;
}

Element g_rescale_inverse(const Element& e, const Rational& lambda) {
  if (lambda == 0)
    throw Error(ErrorKind::zero_lambda_inverse,
                "rescaling is not invertible at weight zero");
  Element out;
  for (const auto& [w, c] : e.terms())
    out.add_term(w, c / rational_pow(lambda, static_cast<unsigned>(w.length())));
  return out;
}

namespace {

Word unit_word(int n) {
  return Word(std::vector<Letter>(static_cast<std::size_t>(n), Letter::unit()));
}

void require_positive_entries(const IndexSequence& seq) {
  for (int e : seq.entries)
    if (e <= 0)
      throw Error(ErrorKind::zero_entry_in_index,
                  "index sequence must be strictly positive: " +
                      to_string(seq));
}

}  // namespace

Element unit_power_shuffle_sum(int m, const IndexSequence& seq,
                               const Rational& lambda,
                               const Alphabet& alphabet) {
  if (m < 0) throw Error(ErrorKind::config_error, "negative unit power");
  require_positive_entries(seq);
  Word y = word_from_indices(seq, alphabet);
  Element out;
  const unsigned len = static_cast<unsigned>(seq.length());
  for (int i = 0; i <= m; ++i) {
    Rational coeff =
        rational_pow(lambda, static_cast<unsigned>(i)) *
        binomial(len, static_cast<unsigned>(i));
    if (coeff == 0) continue;
    Element sh = shuffle_explicit(unit_word(m - i), y);
    out += coeff * sh;
  }
  return out;
}

Element unit_power_product(int m, const IndexSequence& seq,
                           const Rational& lambda, const Alphabet& alphabet) {
  if (m < 0) throw Error(ErrorKind::config_error, "negative unit power");
  require_positive_entries(seq);
  Word y = word_from_indices(seq, alphabet);
  return mixable_shuffle_explicit(unit_word(m), y, lambda, alphabet);
}

Element one_shuffled(const IndexSequence& seq, const Alphabet& alphabet) {
  IndexSequence support = ssupp(seq);  // also validates nonnegativity
  const std::size_t len = seq.length();
  const std::size_t keep = support.length();
  Element out;
  // choose the positions of the nonzero entries
  std::vector<std::size_t> pos(keep);
  for (std::size_t i = 0; i < keep; ++i) pos[i] = i;
  while (true) {
    IndexSequence j;
    j.entries.assign(len, 0);
    for (std::size_t i = 0; i < keep; ++i)
      j.entries[pos[i]] = support.entries[i];
    out.add_term(word_from_indices(j, alphabet), 1);
    // next combination
    std::size_t i = keep;
    while (i > 0) {
      --i;
      if (pos[i] < len - (keep - i)) {
        ++pos[i];
        for (std::size_t k = i + 1; k < keep; ++k) pos[k] = pos[k - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
    if (keep == 0) return out;
  }
}

std::vector<IndexSequence> positive_sequences(int num_letters, int max_len) {
  std::vector<IndexSequence> out;
  IndexSequence current;
  auto rec = [&](auto&& self, int remaining) -> void {
    out.push_back(current);
    if (remaining == 0) return;
    for (int v = 1; v <= num_letters; ++v) {
      current.entries.push_back(v);
      self(self, remaining - 1);
      current.entries.pop_back();
    }
  };
  rec(rec, max_len);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Rows indexed by the union of supporting words, one column per element.
RationalMatrix elements_matrix(const std::vector<Element>& elements) {
  std::map<Word, std::size_t> row_of;
  for (const Element& e : elements)
    for (const auto& [w, c] : e.terms())
      row_of.emplace(w, row_of.size());
  RationalMatrix m(row_of.size(),
                   std::vector<Rational>(elements.size(), Rational(0)));
  for (std::size_t j = 0; j < elements.size(); ++j)
    for (const auto& [w, c] : elements[j].terms()) m[row_of[w]][j] = c;
  // keep the column count visible even when every element is zero
  if (m.empty() && !elements.empty())
    m.emplace_back(elements.size(), Rational(0));
  return m;
}

}  // namespace

RankReport check_linear_independence(const std::vector<Element>& elements) {
  RankReport report;
  report.input_count = elements.size();
  RationalMatrix m = elements_matrix(elements);
  report.rank = matrix_rank(m);
  report.independent = report.rank == elements.size();
  if (!report.independent) report.dependency = kernel_vector(std::move(m));
  return report;
}

std::optional<std::vector<Rational>> express_in_span(
    const std::vector<Element>& basis, const Element& target) {
  std::map<Word, std::size_t> row_of;
  for (const Element& e : basis)
    for (const auto& [w, c] : e.terms())
      row_of.emplace(w, row_of.size());
  for (const auto& [w, c] : target.terms())
    row_of.emplace(w, row_of.size());
  RationalMatrix a(row_of.size(),
                   std::vector<Rational>(basis.size(), Rational(0)));
  std::vector<Rational> b(row_of.size(), Rational(0));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [w, c] : basis[j].terms()) a[row_of[w]][j] = c;
  for (const auto& [w, c] : target.terms()) b[row_of[w]] = c;
  return solve_linear(std::move(a), std::move(b));
}

LabeledElements disjointness_generators(const Alphabet& alphabet,
                                        const Rational& lambda,
                                        int max_unit_power, int max_index_len,
                                        int num_letters) {
  LabeledElements out;
  for (int n = 0; n <= max_unit_power; ++n) {
    for (const IndexSequence& seq : positive_sequences(num_letters, max_index_len)) {
      out.elements.push_back(unit_power_product(n, seq, lambda, alphabet));
      out.labels.push_back("unit^" + std::to_string(n) + "<>y" +
                           to_string(seq));
    }
  }
  return out;
}

RankReport check_linear_disjointness(const Alphabet& alphabet,
                                     const Rational& lambda,
                                     int max_unit_power, int max_index_len,
                                     int num_letters) {
  LabeledElements gens = disjointness_generators(
      alphabet, lambda, max_unit_power, max_index_len, num_letters);
  return check_linear_independence(gens.elements);
}

CheckReport check_one_shuffled_span(const Alphabet& alphabet,
                                    const Rational& lambda,
                                    int max_unit_power, int max_index_len,
                                    int num_letters,
                                    const LabeledElements* generators_override) {
  CheckReport report;
  std::string params = "alphabet=" + alphabet.description() +
                       " lambda=" + to_string(lambda) +
                       " units<=" + std::to_string(max_unit_power) +
                       " len<=" + std::to_string(max_index_len) +
                       " letters=" + std::to_string(num_letters);
  LabeledElements standard = disjointness_generators(
      alphabet, lambda, max_unit_power, max_index_len, num_letters);
  const LabeledElements& gens =
      generators_override ? *generators_override : standard;

  // one-shuffled elements of every class with the window's support and at
  // most max_unit_power zero slots
  std::vector<Element> shuffled;
  std::vector<std::string> shuffled_labels;
  for (const IndexSequence& support : positive_sequences(num_letters, max_index_len)) {
    for (int zeros = 0; zeros <= max_unit_power; ++zeros) {
      IndexSequence padded;
      padded.entries.assign(support.entries.begin(), support.entries.end());
      for (int z = 0; z < zeros; ++z) padded.entries.push_back(0);
      shuffled.push_back(one_shuffled(padded, alphabet));
      shuffled_labels.push_back("O(y" + to_string(padded) + ")");
    }
  }

  {
    bool pass = true;
    std::string witness;
    for (std::size_t i = 0; i < gens.elements.size(); ++i) {
      if (!express_in_span(shuffled, gens.elements[i])) {
        pass = false;
        witness = gens.labels[i] + " not in the one-shuffled span";
        break;
      }
    }
    report.add("products-inside-one-shuffled-span", params, pass, witness);
  }

  {
    bool pass = true;
    std::string witness;
    for (std::size_t i = 0; i < shuffled.size(); ++i) {
      if (!express_in_span(gens.elements, shuffled[i])) {
        pass = false;
        witness = shuffled_labels[i] + " not in the product span";
        break;
      }
    }
    report.add("one-shuffled-inside-product-span", params, pass, witness);
  }

  return report;
}

}  // namespace qshuffle
