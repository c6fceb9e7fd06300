#pragma once

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braids {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A positive braid word on `strands` strands: a sequence of generator
// indices in [1, strands-1], multiplied left to right.  The empty sequence
// is the unit braid.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
    validate();
  }

  void validate() const {
    if (strands < 1) throw std::invalid_argument("strand count must be at least 1");
    for (int x : letters)
      if (x < 1 || x >= strands)
        throw std::invalid_argument("generator index " + std::to_string(x) +
                                    " out of range for " + std::to_string(strands) + " strands");
  }

  [[nodiscard]] int degree() const { return static_cast<int>(letters.size()); }
  [[nodiscard]] bool empty() const { return letters.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline BraidWord unit_braid(int strands) { return BraidWord(strands, {}); }

// Grammar:  word := term (sep term)* ;  term := ("x"? INT>=1)("^" INT>=1)? ;
// sep := whitespace | "." .  A separator may be omitted before an "x".
// Exponents expand: "x1^3" reads as three copies of x1.
inline BraidWord parse_word(const std::string& text, int strands) {
  std::vector<int> letters;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_seps = [&] {
    while (i < n && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '.')) ++i;
  };
  auto read_int = [&](const char* what) -> long {
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError(std::string("expected ") + what, i);
    long v = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000000) throw ParseError(std::string(what) + " too large", i);
      ++i;
    }
    return v;
  };
  skip_seps();
  while (i < n) {
    if (text[i] == 'x') ++i;
    long index = read_int("generator index");
    if (index < 1) throw ParseError("generator index must be at least 1", i);
    long exponent = 1;
    if (i < n && text[i] == '^') {
      ++i;
      exponent = read_int("exponent");
      if (exponent < 1) throw ParseError("exponent must be at least 1", i);
    }
    if (index >= strands)
      throw ParseError("generator index " + std::to_string(index) + " needs more than " +
                           std::to_string(strands) + " strands",
                       i);
    for (long r = 0; r < exponent; ++r) letters.push_back(static_cast<int>(index));
    std::size_t before = i;
    skip_seps();
    if (i < n && i == before && text[i] != 'x')
      throw ParseError("expected separator", i);
  }
  return BraidWord(strands, std::move(letters));
}

// Canonical text form: "x" + index, space separated, exponents expanded.
inline std::string to_text(const BraidWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += 'x';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

// Delta_n = x1 (x2 x1) (x3 x2 x1) ... (x_{n-1} ... x1), of length n(n-1)/2.
inline BraidWord garside_element(int strands) {
  std::vector<int> letters;
  for (int k = 1; k < strands; ++k)
    for (int i = k; i >= 1; --i) letters.push_back(i);
  return BraidWord(strands, std::move(letters));
}

// The letterwise mirror x_i -> x_{n-i}; conjugation by the Garside element.
inline BraidWord flip(const BraidWord& w) {
  std::vector<int> letters(w.letters.size());
  std::transform(w.letters.begin(), w.letters.end(), letters.begin(),
                 [&](int x) { return w.strands - x; });
  return BraidWord(w.strands, std::move(letters));
}

// The anti-automorphism that reads the word backwards.
inline BraidWord reverse_word(const BraidWord& w) {
  std::vector<int> letters(w.letters.rbegin(), w.letters.rend());
  return BraidWord(w.strands, std::move(letters));
}

// Index shift x_i -> x_{i+k} (k may be negative) into `new_strands` strands.
inline BraidWord shift(const BraidWord& w, int k, int new_strands) {
  std::vector<int> letters(w.letters.size());
  std::transform(w.letters.begin(), w.letters.end(), letters.begin(),
                 [&](int x) { return x + k; });
  return BraidWord(new_strands, std::move(letters));
}

// Letters present in the word.  Invariant under the defining relations, so
// this is a property of the braid, not of the chosen representative.
inline std::vector<int> support(const BraidWord& w) {
  std::set<int> s(w.letters.begin(), w.letters.end());
  return {s.begin(), s.end()};
}

// Maximal runs of consecutive indices in the support.
inline std::vector<std::pair<int, int>> support_components(const BraidWord& w) {
  std::vector<int> s = support(w);
  std::vector<std::pair<int, int>> blocks;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j + 1 < s.size() && s[j + 1] == s[j] + 1) ++j;
    blocks.emplace_back(s[i], s[j]);
    i = j + 1;
  }
  return blocks;
}

// Each support block [a,b] widened to [max(1,a-1), min(b+1,n-1)].
inline std::vector<int> extended_support(const BraidWord& w) {
  std::set<int> s;
  for (auto [a, b] : support_components(w))
    for (int i = std::max(1, a - 1); i <= std::min(b + 1, w.strands - 1); ++i) s.insert(i);
  return {s.begin(), s.end()};
}

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
  std::vector<int> letters = a.letters;
  letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  return BraidWord(a.strands, std::move(letters));
}

}  // namespace braids
