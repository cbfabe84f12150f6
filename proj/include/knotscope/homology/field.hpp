#pragma once
// Coefficient fields for the homology engines: F2 and exact rationals.

#include <string>

#include "knotscope/ints.hpp"

namespace knotscope {

struct F2 {
  unsigned char v = 0;
  F2() = default;
  explicit F2(int x) : v(static_cast<unsigned char>(((x % 2) + 2) % 2)) {}
  static F2 zero() { return F2(0); }
  static F2 one() { return F2(1); }
  bool is_zero() const { return v == 0; }
  F2 operator+(F2 o) const { return F2(v ^ o.v); }
  F2 operator-(F2 o) const { return F2(v ^ o.v); }
  F2 operator-() const { return *this; }
  F2 operator*(F2 o) const { return F2(v & o.v); }
  F2 inverse() const { return *this; }
  bool operator==(F2 o) const { return v == o.v; }
  std::string str() const { return v ? "1" : "0"; }
};

struct RatF {
  Rat v;
  RatF() : v(0) {}
  explicit RatF(int x) : v(x) {}
  explicit RatF(const Rat& r) : v(r) {}
  static RatF zero() { return RatF(0); }
  static RatF one() { return RatF(1); }
  bool is_zero() const { return v == 0; }
  RatF operator+(const RatF& o) const { return RatF(Rat(v + o.v)); }
  RatF operator-(const RatF& o) const { return RatF(Rat(v - o.v)); }
  RatF operator-() const { return RatF(Rat(-v)); }
  RatF operator*(const RatF& o) const { return RatF(Rat(v * o.v)); }
  RatF inverse() const { return RatF(Rat(1 / v)); }
  bool operator==(const RatF& o) const { return v == o.v; }
  std::string str() const { return v.get_str(); }
};

enum class CoefficientField { F2, Q };

}  // namespace knotscope
