#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braids/rational.hpp"

namespace braids {

// Laurent polynomial in one variable s with rational coefficients.
// Only nonzero coefficients are stored.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(const Rational& constant) { set(0, constant); }

  static Laurent monomial(const Rational& coefficient, int exponent) {
    Laurent p;
    p.set(exponent, coefficient);
    return p;
  }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

  [[nodiscard]] Rational coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  void set(int exponent, const Rational& value) {
    if (value == Rational(0))
      coeffs_.erase(exponent);
    else
      coeffs_[exponent] = value;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.coeffs_) set(e, coefficient(e) + c);
    return *this;
  }

  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.coeffs_) set(e, coefficient(e) - c);
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent p;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) p.set(ea + eb, p.coefficient(ea + eb) + ca * cb);
    return p;
  }

  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator*(const Rational& c, const Laurent& p) {
    Laurent q;
    for (const auto& [e, v] : p.coeffs_) q.set(e, c * v);
    return q;
  }

  [[nodiscard]] Laurent pow(int k) const {
    Laurent r(Rational(1));
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  // Multiply by s^k.
  [[nodiscard]] Laurent shifted(int k) const {
    Laurent q;
    for (const auto& [e, v] : coeffs_) q.set(e + k, v);
    return q;
  }

  friend bool operator==(const Laurent&, const Laurent&) = default;

  // Terms in decreasing exponent order.
  [[nodiscard]] std::vector<std::pair<int, Rational>> terms() const {
    return {coeffs_.rbegin(), coeffs_.rend()};
  }

 private:
  std::map<int, Rational> coeffs_;
};

inline Laurent laurent_one() { return Laurent(Rational(1)); }

// (s + 1/s) / 2, the value of any unknotted split component.
inline Laurent mu() {
  Laurent p;
  p.set(1, make_rational(1, 2));
  p.set(-1, make_rational(1, 2));
  return p;
}

// Decreasing exponents; "*" between coefficient and power; unit
// coefficients elided; "s^1" printed "s"; "s^0" printed as the bare
// coefficient.  Examples: "-1/2*s^3 + 3/2*s", "1", "0".
inline std::string to_string(const Laurent& p) {
  auto ts = p.terms();
  if (ts.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ts) {
    const bool negative = c < Rational(0);
    const Rational mag = negative ? -c : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string power;
    if (e == 1)
      power = "s";
    else if (e != 0)
      power = "s^" + std::to_string(e);
    if (power.empty())
      out += to_string(mag);
    else if (mag == Rational(1))
      out += power;
    else
      out += to_string(mag) + "*" + power;
  }
  return out;
}

}  // namespace braids
