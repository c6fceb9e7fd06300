#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braids/permutation.hpp"
#include "braids/word.hpp"

namespace braids {

namespace detail {

// Appending x_i to the square-free braid of `a` stays square-free iff the
// value i appears before the value i+1 in a's image list.
inline bool can_absorb(const Permutation& a, int i) {
  for (int v : a.images()) {
    if (v == i) return true;
    if (v == i + 1) return false;
  }
  return false;
}

// Make the adjacent pair (a, b) left-weighted: move prefix letters of b
// into a while a can absorb them.  Returns true if anything moved.
inline bool leftweight_pair(Permutation& a, Permutation& b) {
  bool changed = false;
  for (;;) {
    int move = 0;
    for (int i = 1; i < b.size(); ++i) {
      if (b.has_descent(i) && can_absorb(a, i)) {
        move = i;
        break;
      }
    }
    if (move == 0) break;
    a.append_transposition(move);
    b.strip_front_transposition(move);
    changed = true;
  }
  return changed;
}

}  // namespace detail

// Left greedy normal form: the unique factorization into square-free
// factors F1 F2 ... Fk where each Fi absorbs as much of the rest as it can.
// Two positive words are equal as braids iff their normal forms coincide.
class NormalForm {
 public:
  explicit NormalForm(int strands) : strands_(strands) {
    if (strands < 1) throw std::invalid_argument("strand count must be at least 1");
  }

  static NormalForm from_word(const BraidWord& w) {
    NormalForm nf(w.strands);
    for (int x : w.letters) nf.push_letter(x);
    nf.normalize();
    return nf;
  }

  static NormalForm from_factor(const Permutation& p) {
    NormalForm nf(p.size());
    if (!p.is_identity()) nf.factors_.push_back(p);
    return nf;
  }

  [[nodiscard]] int strands() const { return strands_; }
  [[nodiscard]] const std::vector<Permutation>& factors() const { return factors_; }
  [[nodiscard]] bool is_unit() const { return factors_.empty(); }
  [[nodiscard]] bool is_square_free() const { return factors_.size() <= 1; }

  [[nodiscard]] int degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.inversions();
    return d;
  }

  [[nodiscard]] Permutation permutation() const {
    std::vector<int> img(strands_);
    for (int i = 1; i <= strands_; ++i) img[i - 1] = i;
    for (const auto& f : factors_)
      for (int& v : img) v = f.image(v);
    return Permutation(std::move(img));
  }

  // Generators that divide the braid on the left: the descents of the
  // first factor.
  [[nodiscard]] std::vector<int> starting_set() const {
    if (factors_.empty()) return {};
    return factors_.front().descents();
  }

  [[nodiscard]] bool letter_divides_left(int i) const {
    return !factors_.empty() && factors_.front().has_descent(i);
  }

  // Remove one x_i from the left; precondition letter_divides_left(i).
  void strip_letter_front(int i) {
    if (!letter_divides_left(i)) throw std::invalid_argument("letter does not divide on the left");
    factors_.front().strip_front_transposition(i);
    if (factors_.front().is_identity()) factors_.erase(factors_.begin());
    normalize();
  }

  void push_letter(int i) {
    if (i < 1 || i >= strands_) throw std::invalid_argument("generator index out of range");
    if (!factors_.empty() && detail::can_absorb(factors_.back(), i)) {
      factors_.back().append_transposition(i);
    } else {
      Permutation t = Permutation::identity(strands_);
      t.append_transposition(i);
      factors_.push_back(std::move(t));
    }
  }

  // Append one letter and restore the normal form.
  void append_letter(int i) {
    push_letter(i);
    normalize();
  }

  void append(const NormalForm& other) {
    if (other.strands_ != strands_) throw std::invalid_argument("strand count mismatch");
    factors_.insert(factors_.end(), other.factors_.begin(), other.factors_.end());
    normalize();
  }

  [[nodiscard]] BraidWord canonical_word() const {
    std::vector<int> letters;
    for (const auto& f : factors_) {
      BraidWord fw = permutation_braid_word(f);
      letters.insert(letters.end(), fw.letters.begin(), fw.letters.end());
    }
    return BraidWord(strands_, std::move(letters));
  }

  // Compact equality key; the canonical word determines the braid.
  [[nodiscard]] std::string key() const {
    std::string k;
    k.push_back(static_cast<char>(strands_));
    for (const auto& f : factors_) {
      BraidWord fw = permutation_braid_word(f);
      for (int x : fw.letters) k.push_back(static_cast<char>(x));
    }
    return k;
  }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  void normalize() {
    bool any = true;
    while (any) {
      any = false;
      for (std::size_t j = 0; j + 1 < factors_.size();) {
        if (detail::leftweight_pair(factors_[j], factors_[j + 1])) any = true;
        if (factors_[j + 1].is_identity())
          factors_.erase(factors_.begin() + static_cast<long>(j) + 1);
        else
          ++j;
      }
    }
  }

  int strands_;
  std::vector<Permutation> factors_;
};

inline NormalForm normal_form(const BraidWord& w) { return NormalForm::from_word(w); }

inline NormalForm multiply(const BraidWord& a, const BraidWord& b) {
  return NormalForm::from_word(concat(a, b));
}

inline NormalForm multiply(const NormalForm& a, const NormalForm& b) {
  NormalForm out = a;
  out.append(b);
  return out;
}

inline bool braid_equal(const BraidWord& a, const BraidWord& b) {
  return normal_form(a) == normal_form(b);
}

// Quotient a^{-1} b when a divides b on the left, stripping a letter at a
// time; empty when a is not a left divisor.
inline std::optional<NormalForm> left_quotient(const BraidWord& a, const NormalForm& b) {
  NormalForm rest = b;
  for (int x : a.letters) {
    if (!rest.letter_divides_left(x)) return std::nullopt;
    rest.strip_letter_front(x);
  }
  return rest;
}

inline bool left_divides(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
  return left_quotient(a, normal_form(b)).has_value();
}

inline std::optional<NormalForm> right_quotient(const BraidWord& b, const BraidWord& a) {
  auto q = left_quotient(reverse_word(a), normal_form(reverse_word(b)));
  if (!q) return std::nullopt;
  return normal_form(reverse_word(q->canonical_word()));
}

inline bool right_divides(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
  return left_divides(reverse_word(a), reverse_word(b));
}

inline bool is_square_free(const BraidWord& w) { return normal_form(w).is_square_free(); }

// The generators dividing w on the left.
inline std::vector<int> initial_set(const BraidWord& w) {
  return normal_form(w).starting_set();
}

}  // namespace braids
