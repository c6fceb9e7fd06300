#pragma once

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "braids/word.hpp"

namespace braids {

// A permutation of {1..n}.  image(i) is where the strand starting at
// position i ends; words act left to right, so appending a letter x_k
// post-composes with the transposition of the values k, k+1.
class Permutation {
 public:
  Permutation() : img_{1} {}
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) { validate(); }

  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  static Permutation order_reversing(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(std::move(v));
  }

  [[nodiscard]] int size() const { return static_cast<int>(img_.size()); }
  [[nodiscard]] int image(int i) const { return img_[i - 1]; }
  [[nodiscard]] const std::vector<int>& images() const { return img_; }

  [[nodiscard]] bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if (img_[i - 1] != i) return false;
    return true;
  }

  // Post-compose with the transposition swapping the values k, k+1:
  // the permutation of (this braid) * x_k.
  void append_transposition(int k) {
    for (int& v : img_) {
      if (v == k)
        v = k + 1;
      else if (v == k + 1)
        v = k;
    }
  }

  // Pre-compose with the transposition of positions k, k+1: the
  // permutation of x_k^{-1} * (this braid).
  void strip_front_transposition(int k) { std::swap(img_[k - 1], img_[k]); }

  [[nodiscard]] Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= size(); ++i) inv[img_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
  }

  // {i : image(i) > image(i+1)}.
  [[nodiscard]] std::vector<int> descents() const {
    std::vector<int> d;
    for (int i = 1; i < size(); ++i)
      if (img_[i - 1] > img_[i]) d.push_back(i);
    return d;
  }

  [[nodiscard]] bool has_descent(int i) const { return img_[i - 1] > img_[i]; }

  [[nodiscard]] int inversions() const {
    int count = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (img_[i] > img_[j]) ++count;
    return count;
  }

  // Disjoint cycles, each rotated to start at its minimum, sorted by minimum.
  [[nodiscard]] std::vector<std::vector<int>> cycles() const {
    std::vector<bool> seen(size() + 1, false);
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= size(); ++i) {
      if (seen[i]) continue;
      std::vector<int> cyc;
      for (int j = i; !seen[j]; j = image(j)) {
        seen[j] = true;
        cyc.push_back(j);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  void validate() const {
    std::vector<bool> seen(img_.size() + 1, false);
    for (int v : img_) {
      if (v < 1 || v > size() || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = true;
    }
  }

  std::vector<int> img_;
};

inline Permutation word_to_permutation(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands);
  for (int x : w.letters) p.append_transposition(x);
  return p;
}

// The block structure (k_1,j_1),...,(k_s,j_s) of the unique square-free
// braid mapping to p: k strictly increasing, j_h <= k_h, block (k,j)
// contributing the descending run x_k x_{k-1} ... x_j.  Extraction peels
// the largest block: the last block exists iff p(m+1) != m+1, with
// j = p(m+1).
inline std::vector<std::pair<int, int>> divisor_blocks(const Permutation& p) {
  std::vector<int> img = p.images();
  const int n = p.size();
  std::vector<std::pair<int, int>> blocks;
  for (int m = n - 1; m >= 1; --m) {
    int j = img[m];
    if (j == m + 1) continue;
    blocks.emplace_back(m, j);
    // Remove the cycle (m+1 -> j, i -> i+1 for j <= i <= m) from the left
    // of what remains: replace each image v in [j, m+1] by its preimage
    // under the cycle.
    for (int& v : img)
      if (v >= j && v <= m + 1) v = (v == j) ? m + 1 : v - 1;
  }
  std::reverse(blocks.begin(), blocks.end());
  return blocks;
}

// The canonical word of the square-free braid with permutation p.  It is
// the length-lexicographically least representative (x1 < x2 < ...).
inline BraidWord permutation_braid_word(const Permutation& p) {
  std::vector<int> letters;
  for (auto [k, j] : divisor_blocks(p))
    for (int i = k; i >= j; --i) letters.push_back(i);
  return BraidWord(p.size(), std::move(letters));
}

}  // namespace braids
