#include "qshuffle/report.hpp"

namespace qshuffle {

bool CheckReport::all_pass() const {
  for (const CheckRow& row : rows)
    if (!row.pass) return false;
  return true;
}

void CheckReport::add(std::string name, std::string params, bool pass,
                      std::string witness) {
  rows.push_back({std::move(name), std::move(params), pass, std::move(witness)});
}

void CheckReport::append(const CheckReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

std::string format_report(const CheckReport& report) {
  std::string out;
  for (const CheckRow& row : report.rows) {
    out += row.name;
    out += " | ";
    out += row.params.empty() ? "-" : row.params;
    out += " | ";
    out += row.pass ? "PASS" : "FAIL";
    out += " | ";
    out += row.witness.empty() ? "-" : row.witness;
    out += '\n';
  }
  return out;
}

}  // namespace qshuffle
