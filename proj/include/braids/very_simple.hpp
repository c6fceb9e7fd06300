#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "braids/word.hpp"

namespace braids {

// An ascending run U(a,b) = x_a x_{a+1} ... x_b (a <= b) or a descending
// run D(c,d) = x_c x_{c-1} ... x_d (c > d).  A single letter is always U.
struct VerySimpleFactor {
  int from = 1;
  int to = 1;

  VerySimpleFactor() = default;
  VerySimpleFactor(int f, int t) : from(f), to(t) {
    if (f < 1 || t < 1) throw std::invalid_argument("factor indices must be positive");
  }

  static VerySimpleFactor ascending(int a, int b) {
    if (a > b) throw std::invalid_argument("ascending factor needs a <= b");
    return {a, b};
  }
  static VerySimpleFactor descending(int c, int d) {
    if (c <= d) throw std::invalid_argument("descending factor needs c > d");
    return {c, d};
  }

  [[nodiscard]] bool is_ascending() const { return from <= to; }
  [[nodiscard]] int lo() const { return std::min(from, to); }
  [[nodiscard]] int hi() const { return std::max(from, to); }
  [[nodiscard]] int first_letter() const { return from; }
  [[nodiscard]] int length() const { return hi() - lo() + 1; }

  [[nodiscard]] std::vector<int> letters() const {
    std::vector<int> out;
    if (is_ascending())
      for (int i = from; i <= to; ++i) out.push_back(i);
    else
      for (int i = from; i >= to; --i) out.push_back(i);
    return out;
  }

  [[nodiscard]] std::string to_string() const {
    return (is_ascending() ? "U(" : "D(") + std::to_string(from) + "," + std::to_string(to) + ")";
  }

  friend bool operator==(const VerySimpleFactor&, const VerySimpleFactor&) = default;
};

inline BraidWord factor_word(const VerySimpleFactor& f, int strands) {
  return BraidWord(strands, f.letters());
}

inline std::string to_string(const VerySimpleFactor& f) { return f.to_string(); }

}  // namespace braids
