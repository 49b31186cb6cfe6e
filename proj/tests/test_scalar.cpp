#include <doctest.h>

#include <random>

#include "yh/scalar.hpp"

using namespace yh;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

CycScalar random_scalar(int r, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<Rational> c;
  for (int k = 0; k < euler_phi(r); ++k) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return CycScalar(r, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == ints({1, 1}));
  CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
  CHECK(cyclotomic_polynomial(3) == ints({1, 1, 1}));
  CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
  CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("roots of unity") {
  CHECK(CycScalar::zeta(1, 1).is_one());
  CHECK(CycScalar::zeta(2, 2) == CycScalar(2, -1));
  CHECK(CycScalar::zeta(4, 3) == CycScalar(4, -1));
  CHECK_THROWS_AS(CycScalar::zeta(3, 4), std::out_of_range);
  CHECK_THROWS_AS(CycScalar::zeta(3, 0), std::out_of_range);
  for (int r = 1; r <= 8; ++r) {
    CycScalar p = CycScalar::zeta_power(r, 1);
    CycScalar acc(r, 1);
    for (int k = 0; k < r; ++k) acc *= p;
    CHECK(acc.is_one());
    CHECK(CycScalar::zeta_power(r, -1) * p == CycScalar(r, 1));
    // 1 + z + ... + z^{r-1} = 0 for r > 1.
    CycScalar sum(r);
    for (int k = 0; k < r; ++k) sum += CycScalar::zeta_power(r, k);
    CHECK(sum.is_zero() == (r > 1));
  }
}

TEST_CASE("inverses") {
  CHECK(CycScalar(2, -1).inverse() == CycScalar(2, -1));
  CHECK(CycScalar(1, Rational(1, 2)) * CycScalar(1, 2) == CycScalar(1, 1));
  CHECK(CycScalar::zeta(4, 2).inverse() == -CycScalar::zeta(4, 2));
  CHECK_THROWS_AS(CycScalar(3).inverse(), std::domain_error);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  for (int r : {1, 2, 3, 4, 5, 6, 8}) {
    for (int trial = 0; trial < 20; ++trial) {
      CycScalar a = random_scalar(r, rng), b = random_scalar(r, rng), c = random_scalar(r, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("mixed orders are rejected") {
  CHECK_THROWS_AS(CycScalar(2, 1) + CycScalar(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(CycScalar(2, 1) * CycScalar(4, 1), std::invalid_argument);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(to_string(Rational(4)) == "4");
}

TEST_CASE("rationality queries") {
  CHECK(CycScalar(3, Rational(2, 3)).is_rational());
  CHECK(CycScalar(3, Rational(2, 3)).rational_value() == Rational(2, 3));
  CHECK_FALSE(CycScalar::zeta(3, 2).is_rational());
  // z + z^2 = -1 in Q(zeta_3).
  CHECK((CycScalar::zeta(3, 2) + CycScalar::zeta(3, 3)) == CycScalar(3, -1));
}

TEST_CASE("roots of unity multiply by adding indices") {
  for (int r = 1; r <= 7; ++r) {
    for (int a = 1; a <= r; ++a) {
      for (int b = 1; b <= r; ++b) {
        CHECK(CycScalar::zeta(r, a) * CycScalar::zeta(r, b) == CycScalar::zeta(r, (a - 1 + b - 1) % r + 1));
      }
    }
  }
}

TEST_CASE("character orthogonality") {
  for (int r = 1; r <= 7; ++r) {
    for (int k = 0; k <= 2 * r; ++k) {
      CycScalar sum(r);
      for (int a = 1; a <= r; ++a) {
        CycScalar p(r, 1);
        for (int e = 0; e < k; ++e) p *= CycScalar::zeta(r, a);
        sum += p;
      }
      CHECK(sum == CycScalar(r, k % r == 0 ? r : 0));
    }
  }
}
