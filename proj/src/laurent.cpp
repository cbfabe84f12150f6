#include "knotscope/laurent.hpp"

#include <cctype>
#include <sstream>

namespace knotscope {

int LaurentPoly::min_exponent() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no exponents");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no exponents");
  return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.coeffs_[e] += c;
  r.snap();
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.coeffs_[e] -= c;
  r.snap();
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) r.coeffs_[e1 + e2] += c1 * c2;
  r.snap();
  return r;
}

LaurentPoly LaurentPoly::shifted(int e, const Int& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [exp, coeff] : coeffs_) r.coeffs_[exp + e] = coeff * c;
  return r;
}

LaurentPoly LaurentPoly::invert_variable() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) throw std::domain_error("substitute_power: k must be nonzero");
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e * k] = c;
  return r;
}

Rat LaurentPoly::eval(const Rat& x) const {
  if (x == 0) throw std::domain_error("cannot evaluate at 0");
  if (is_zero()) return Rat(0);
  // Horner over the exponent range [min, max].
  int lo = min_exponent(), hi = max_exponent();
  Rat acc(0);
  for (int e = hi; e >= lo; --e) {
    acc *= x;
    auto it = coeffs_.find(e);
    if (it != coeffs_.end()) acc += Rat(it->second);
  }
  if (lo != 0) {
    Rat xs(1);
    Rat inv = Rat(1) / x;
    for (int i = 0; i < -lo; ++i) xs *= inv;
    for (int i = 0; i < lo; ++i) xs *= x;
    acc *= xs;
  }
  acc.canonicalize();
  return acc;
}

LaurentPoly LaurentPoly::normalized_up_to_units() const {
  if (is_zero()) throw std::domain_error("cannot normalize zero polynomial");
  LaurentPoly r = shifted(-min_exponent());
  if (r.coeffs_.rbegin()->second < 0) r = -r;
  return r;
}

int LaurentPoly::degree_span() const { return max_exponent() - min_exponent(); }

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return LaurentPoly();
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const int dlead = divisor.max_exponent();
  const Int& dc = divisor.coeffs_.rbegin()->second;
  while (!rem.is_zero()) {
    int rlead = rem.max_exponent();
    Int rc = rem.coeffs_.rbegin()->second;
    if (rc % dc != 0) throw std::domain_error("inexact polynomial division");
    Int q = rc / dc;
    LaurentPoly t(q, rlead - dlead);
    quot += t;
    rem -= t * divisor;
    if (!rem.is_zero() && rem.max_exponent() >= rlead)
      throw std::domain_error("inexact polynomial division");
  }
  return quot;
}

namespace {

void append_term(std::ostringstream& out, bool first, const Int& c, int e,
                 const std::string& var) {
  Int a = c < 0 ? Int(-c) : c;
  if (first) {
    if (c < 0) out << "-";
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  if (a != 1 || e == 0) out << a.get_str();
  if (e != 0) {
    if (a != 1) out << "*";
    out << var;
    if (e != 1) out << "^" << e;
  }
}

}  // namespace

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    append_term(out, first, it->second, it->first, "t");
    first = false;
  }
  return out.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
  LaurentPoly result;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("empty polynomial text");
  bool any = false;
  int sign = 1;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (any) {
      throw std::invalid_argument("expected '+' or '-' in polynomial text");
    }
    // coefficient (optional), then optional [*] t [^ exp]
    Int coeff(1);
    bool saw_digits = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      coeff = Int(text.substr(i, j - i));
      i = j;
      saw_digits = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
    }
    int exp = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      exp = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        int esign = 1;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
          if (text[i] == '-') esign = -1;
          ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw std::invalid_argument("bad exponent in polynomial text");
        size_t j = i;
        long v = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
          v = v * 10 + (text[j] - '0');
          ++j;
        }
        exp = static_cast<int>(esign * v);
        i = j;
      }
    } else if (!saw_digits) {
      throw std::invalid_argument("expected term in polynomial text");
    }
    result += LaurentPoly(sign * coeff, exp);
    any = true;
    sign = 1;
    skip_ws();
  }
  if (!any) throw std::invalid_argument("no terms in polynomial text");
  return result;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
  BivariatePoly r = *this;
  for (const auto& [e, c] : o.coeffs_) {
    auto& slot = r.coeffs_[e];
    slot += c;
    if (slot == 0) r.coeffs_.erase(e);
  }
  return r;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
  BivariatePoly r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) {
      auto key = std::make_pair(e1.first + e2.first, e1.second + e2.second);
      auto& slot = r.coeffs_[key];
      slot += c1 * c2;
      if (slot == 0) r.coeffs_.erase(key);
    }
  return r;
}

LaurentPoly BivariatePoly::eval_u(const Int& value) const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) {
    Int scaled = c;
    int ue = e.first;
    if (ue >= 0) {
      scaled *= pow_int(value, static_cast<unsigned long>(ue));
    } else {
      if (value != 1 && value != -1)
        throw std::domain_error("negative u-exponent needs a unit value");
      scaled *= pow_int(value, static_cast<unsigned long>(-ue));
    }
    out += LaurentPoly(scaled, e.second);
  }
  return out;
}

std::string BivariatePoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    Int a = c < 0 ? Int(-c) : c;
    bool need_star = false;
    if (a != 1 || (e.first == 0 && e.second == 0)) {
      out << a.get_str();
      need_star = true;
    }
    if (e.first != 0) {
      if (need_star) out << "*";
      out << "u";
      if (e.first != 1) out << "^" << e.first;
      need_star = true;
    }
    if (e.second != 0) {
      if (need_star) out << "*";
      out << "q";
      if (e.second != 1) out << "^" << e.second;
    }
    first = false;
  }
  return out.str();
}

}  // namespace knotscope
