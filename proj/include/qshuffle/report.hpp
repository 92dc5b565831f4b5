#pragma once
#include <string>
#include <vector>

namespace qshuffle {

// One line of a machine-checkable verdict table. Witness is empty on passing
// rows and holds a minimal counterexample description otherwise.
struct CheckRow {
  std::string name;
  std::string params;
  bool pass = false;
  std::string witness;
};

struct CheckReport {
  std::vector<CheckRow> rows;

  bool all_pass() const;
  void add(std::string name, std::string params, bool pass,
           std::string witness = "");
  void append(const CheckReport& other);
};

// One row per line: name | params | PASS/FAIL | witness ("-" when empty).
std::string format_report(const CheckReport& report);

}  // namespace qshuffle
