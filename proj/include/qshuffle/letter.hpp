#pragma once
#include <string>
#include <utility>

namespace qshuffle {

// A named generator with a positive degree. The reserved name "1" of degree 0
// is the algebra unit; it may appear in tensor slots but never belongs to an
// alphabet's degree slices.
class Letter {
public:
  Letter(std::string name, int degree)
      : name_(std::move(name)), degree_(degree) {}

  static const Letter& unit() {
    static const Letter u{"1", 0};
    return u;
  }

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  bool is_unit() const { return degree_ == 0 && name_ == "1"; }

  bool operator==(const Letter& other) const = default;
  bool operator<(const Letter& other) const {
    if (int c = name_.compare(other.name_); c != 0) return c < 0;
    return degree_ < other.degree_;
  }

private:
  std::string name_;
  int degree_;
};

}  // namespace qshuffle
