#pragma once
// Sparse one- and two-variable Laurent polynomials with exact integer
// coefficients.  Values are immutable in spirit: operations return new
// polynomials and never store zero coefficients.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "knotscope/ints.hpp"

namespace knotscope {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Int& constant) {
    if (constant != 0) coeffs_[0] = constant;
  }
  LaurentPoly(const Int& c, int exponent) {
    if (c != 0) coeffs_[exponent] = c;
  }

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return LaurentPoly(Int(1)); }
  // The variable itself, t^e.
  static LaurentPoly var(int e = 1) { return LaurentPoly(Int(1), e); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
           coeffs_.begin()->second == 1;
  }

  const std::map<int, Int>& terms() const { return coeffs_; }

  Int coeff(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  int min_exponent() const;  // throws on zero polynomial
  int max_exponent() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Multiply by c * t^e (a unit when c = +-1).
  LaurentPoly shifted(int e, const Int& c = Int(1)) const;

  // t -> t^-1.
  LaurentPoly invert_variable() const;

  // t -> t^k, k != 0 (k < 0 composes a power with inversion).
  LaurentPoly substitute_power(int k) const;

  // Exact evaluation at a nonzero rational point.
  Rat eval(const Rat& x) const;

  // Canonical representative of the unit-multiple orbit {+-t^k p}: lowest
  // exponent 0 and positive leading coefficient.  Throws on zero input.
  LaurentPoly normalized_up_to_units() const;

  // max exponent - min exponent.  Throws on zero input.
  int degree_span() const;

  // Exact division; throws std::domain_error if not divisible.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  std::string str() const;
  static LaurentPoly parse(const std::string& text);

 private:
  void snap() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
      it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
  }
  std::map<int, Int> coeffs_;
};

// Integer Laurent polynomials in two variables (u, q); used for Khovanov
// Poincare polynomials, where u tracks homological degree.
class BivariatePoly {
 public:
  BivariatePoly() = default;

  static BivariatePoly term(const Int& c, int u_exp, int q_exp) {
    BivariatePoly p;
    if (c != 0) p.coeffs_[{u_exp, q_exp}] = c;
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<std::pair<int, int>, Int>& terms() const { return coeffs_; }

  BivariatePoly operator+(const BivariatePoly& o) const;
  BivariatePoly operator*(const BivariatePoly& o) const;
  bool operator==(const BivariatePoly& o) const { return coeffs_ == o.coeffs_; }

  // Set u = value (typically -1 for the graded Euler characteristic),
  // leaving a one-variable polynomial in q.
  LaurentPoly eval_u(const Int& value) const;

  std::string str() const;  // terms like "3*u^-1*q^5" in lexicographic order

 private:
  std::map<std::pair<int, int>, Int> coeffs_;
};

}  // namespace knotscope
