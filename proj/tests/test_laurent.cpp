#include <random>

#include "doctest.h"
#include "knotscope/laurent.hpp"

using namespace knotscope;

namespace {

LaurentPoly trefoil_delta() {
  // t^2 - t + 1
  return LaurentPoly(Int(1), 2) + LaurentPoly(Int(-1), 1) + LaurentPoly(Int(1), 0);
}

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 5), expo(-6, 6), coeff(-9, 9);
  LaurentPoly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) p += LaurentPoly(Int(coeff(rng)), expo(rng));
  return p;
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
  LaurentPoly d = trefoil_delta();
  CHECK(d * LaurentPoly::one() == d);
  // (t-1)*t + 1 == t^2 - t + 1
  LaurentPoly alt = (LaurentPoly::var() - LaurentPoly::one()) * LaurentPoly::var() +
                    LaurentPoly::one();
  CHECK(alt == d);
}

TEST_CASE("ring axioms on randomized inputs") {
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    LaurentPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("eval is exact and a homomorphism") {
  LaurentPoly d = trefoil_delta();
  CHECK(d.eval(Rat(-1)) == Rat(3));
  CHECK(LaurentPoly::one().eval(Rat(-1)) == Rat(1));
  CHECK_THROWS_AS(d.eval(Rat(0)), std::domain_error);

  std::mt19937 rng(11);
  Rat x(3, 7);
  for (int it = 0; it < 100; ++it) {
    LaurentPoly p = random_poly(rng), q = random_poly(rng);
    Rat lhs = (p * q + p).eval(x);
    Rat rhs = p.eval(x) * q.eval(x) + p.eval(x);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("invert_variable") {
  LaurentPoly d = trefoil_delta();
  LaurentPoly inv = d.invert_variable();
  CHECK(inv.coeff(-2) == 1);
  CHECK(inv.coeff(-1) == -1);
  CHECK(inv.coeff(0) == 1);
  CHECK(inv.invert_variable() == d);
}

TEST_CASE("normalize_up_to_units") {
  // -t^3 + t^2 - t  ->  t^2 - t + 1
  LaurentPoly p = LaurentPoly(Int(-1), 3) + LaurentPoly(Int(1), 2) + LaurentPoly(Int(-1), 1);
  CHECK(p.normalized_up_to_units() == trefoil_delta());
  CHECK(LaurentPoly::one().normalized_up_to_units() == LaurentPoly::one());
  CHECK_THROWS_AS(LaurentPoly::zero().normalized_up_to_units(), std::domain_error);

  std::mt19937 rng(3);
  for (int it = 0; it < 100; ++it) {
    LaurentPoly p2 = random_poly(rng);
    if (p2.is_zero()) continue;
    LaurentPoly n = p2.normalized_up_to_units();
    CHECK(n.normalized_up_to_units() == n);  // idempotent
    for (int k = -3; k <= 3; ++k) {
      CHECK(p2.shifted(k).normalized_up_to_units() == n);
      CHECK(p2.shifted(k, Int(-1)).normalized_up_to_units() == n);
    }
  }
}

TEST_CASE("degree_span") {
  CHECK(trefoil_delta().degree_span() == 2);
  CHECK(LaurentPoly::one().degree_span() == 0);
  std::mt19937 rng(5);
  for (int it = 0; it < 100; ++it) {
    LaurentPoly p = random_poly(rng), q = random_poly(rng);
    if (p.is_zero() || q.is_zero()) continue;
    CHECK((p * q).degree_span() == p.degree_span() + q.degree_span());
  }
}

TEST_CASE("text form round-trips") {
  LaurentPoly d = trefoil_delta();
  CHECK(d.str() == "t^2 - t + 1");
  CHECK(LaurentPoly::parse("t^2 - t + 1") == d);
  LaurentPoly j = LaurentPoly(Int(-1), 4) + LaurentPoly(Int(1), 3) + LaurentPoly(Int(1), 1);
  CHECK(j.str() == "-t^4 + t^3 + t");
  CHECK(LaurentPoly::parse(j.str()) == j);
  CHECK(LaurentPoly::parse("1") == LaurentPoly::one());
  CHECK(LaurentPoly::parse("3*t^-2 + 5") ==
        LaurentPoly(Int(3), -2) + LaurentPoly(Int(5), 0));

  std::mt19937 rng(13);
  for (int it = 0; it < 100; ++it) {
    LaurentPoly p = random_poly(rng);
    if (p.is_zero()) continue;
    CHECK(LaurentPoly::parse(p.str()) == p);
  }
}

TEST_CASE("bivariate polynomials") {
  BivariatePoly p = BivariatePoly::term(Int(1), 0, 1) + BivariatePoly::term(Int(1), 0, -1);
  BivariatePoly q = BivariatePoly::term(Int(1), 2, 5);
  BivariatePoly r = p * q;
  CHECK(r == BivariatePoly::term(Int(1), 2, 6) + BivariatePoly::term(Int(1), 2, 4));
  LaurentPoly euler = r.eval_u(Int(-1));
  CHECK(euler == LaurentPoly(Int(1), 6) + LaurentPoly(Int(1), 4));
}
