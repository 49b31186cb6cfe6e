#include <doctest.h>

#include <algorithm>
#include <random>

#include "t_oracle.hpp"
#include "yh/yokonuma.hpp"

using namespace yh;

namespace {

YAlgebra cyc(int r, int n, std::vector<Rational> v) { return YAlgebra(YParams::cyclotomic(r, n, std::move(v))); }

YElement sum_equal_pairs(const YAlgebra& y, int i, const YElement& tail) {
  YElement out;
  for (const auto& chi : all_characters(y.r(), y.n())) {
    if (chi.values[i] == chi.values[i + 1]) out += y.multiply(y.idempotent(chi), tail);
  }
  return out;
}

TMonomial tmono(std::vector<int> t, std::vector<int> x, Permutation w) { return {std::move(t), std::move(x), std::move(w)}; }

}  // namespace

TEST_CASE("idempotents in the t-presentation") {
  const YAlgebra y1 = cyc(1, 2, {Rational(0)});
  CHECK(y1.idempotent_t(Character{{1, 1}}) == TElement(tmono({0, 0}, {0, 0}, Permutation::identity(2)), CycScalar(1, 1)));
  const YAlgebra y = cyc(2, 1, {Rational(0)});
  const CycScalar half(2, Rational(1, 2));
  const TMonomial one = tmono({0}, {0}, Permutation::identity(1)), t1 = tmono({1}, {0}, Permutation::identity(1));
  TElement plus, minus;
  plus.add(one, half);
  plus.add(t1, half);
  minus.add(one, half);
  minus.add(t1, -half);
  CHECK(y.idempotent_t(Character{{1}}) == plus);
  CHECK(y.idempotent_t(Character{{2}}) == minus);
  // t_1 = E_(1) - E_(2)
  CHECK(y.from_t_basis(TElement(t1, CycScalar(2, 1))) == y.idempotent(Character{{1}}) - y.idempotent(Character{{2}}));
  CHECK(y.to_t_basis(y.unit()) == TElement(one, CycScalar(2, 1)));
}

TEST_CASE("defining relations") {
  for (const auto& y : {cyc(2, 2, {Rational(0), Rational(1)}), YAlgebra(YParams::affine(3, 2))}) {
    const YElement f1 = y.f(0), x1 = y.x(0), x2 = y.x(1);
    CHECK(y.multiply(f1, f1) == y.unit());
    CHECK(y.multiply(f1, x2) == y.multiply(x1, f1) + sum_equal_pairs(y, 0, y.unit()));
    CHECK(y.multiply(f1, x2) == y.multiply(x1, f1) + y.e(0));
    CHECK(y.multiply(f1, x1) == y.multiply(x2, f1) - y.e(0));
    CHECK(y.multiply(x1, x2) == y.multiply(x2, x1));
    for (int j = 0; j < 2; ++j) {
      CHECK(y.multiply(y.t(j), x1) == y.multiply(x1, y.t(j)));
      CHECK(y.multiply(f1, y.t(j)) == y.multiply(y.t(1 - j), f1));
    }
    for (const auto& chi : all_characters(y.r(), 2)) {
      const YElement e = y.idempotent(chi);
      CHECK(y.multiply(e, e) == e);
      for (int j = 0; j < 2; ++j) CHECK(y.multiply(y.t(j), e) == CycScalar::zeta(y.r(), chi.values[j]) * e);
      for (const auto& psi : all_characters(y.r(), 2)) {
        if (psi != chi) CHECK(y.multiply(e, y.idempotent(psi)).is_zero());
      }
    }
    // t_j^r = 1
    YElement p = y.unit();
    for (int k = 0; k < y.r(); ++k) p = y.multiply(p, y.t(0));
    CHECK(p == y.unit());
  }
}

TEST_CASE("braid relation") {
  const YAlgebra y = cyc(2, 3, {Rational(0)});
  CHECK(y.multiply(y.multiply(y.f(0), y.f(1)), y.f(0)) == y.multiply(y.multiply(y.f(1), y.f(0)), y.f(1)));
  CHECK(y.multiply(y.f(0), y.f(1)) == y.f(Permutation::simple(3, 0) * Permutation::simple(3, 1)));
}

TEST_CASE("cyclotomic reduction") {
  const YAlgebra y1 = cyc(2, 1, {Rational(5)});
  CHECK(y1.x(0) == CycScalar(2, 5) * y1.unit());
  const YAlgebra y2 = cyc(2, 1, {Rational(0), Rational(1)});
  CHECK(y2.multiply(y2.x(0), y2.x(0)) == y2.x(0));
  const YAlgebra y3 = cyc(2, 2, {Rational(3)});
  // x_2 = f_1 x_1 f_1 + e_1 f_1 = v_1 + sum_{chi_1 = chi_2} E_chi f_1
  CHECK(y3.x(1) == CycScalar(2, 3) * y3.unit() + sum_equal_pairs(y3, 0, y3.f(0)));
  const YAlgebra y4 = cyc(3, 2, {Rational(0), Rational(2)});
  for (const auto& m : y4.enumerate_basis()) {
    const YElement e = y4.monomial(m);
    for (const auto& [t, c] : e.terms()) {
      for (int e : t.x) CHECK(e < 2);
    }
  }
  // x_j^d reduces to strictly lower degree and satisfies (x_1 - v_1)(x_1 - v_2) = 0.
  const YElement g = y4.multiply(y4.x(0) - CycScalar(3, 0) * y4.unit(), y4.x(0) - CycScalar(3, 2) * y4.unit());
  CHECK(g.is_zero());
  const YMonomial high{Character{{1, 1}}, {3, 2}, Permutation::simple(2, 0)};
  CHECK(y4.cyclotomic_reduce(high) == y4.monomial(high));
  CHECK_THROWS_AS(YAlgebra(YParams::affine(2, 2)).cyclotomic_reduce(high), std::invalid_argument);
}

TEST_CASE("t-basis conversion round trip") {
  for (const auto& y : {cyc(2, 2, {Rational(0), Rational(1)}), cyc(3, 2, {Rational(1)}), cyc(4, 1, {Rational(0), Rational(1)})}) {
    for (const auto& m : y.enumerate_basis()) {
      const YElement e = y.monomial(m);
      CHECK(y.from_t_basis(y.to_t_basis(e)) == e);
    }
  }
}

TEST_CASE("block idempotents") {
  const YAlgebra y1 = cyc(1, 3, {Rational(0)});
  CHECK(y1.block_idempotent(Composition{{3}}) == y1.unit());
  const YAlgebra y2 = cyc(2, 1, {Rational(0)});
  CHECK(y2.block_idempotent(Composition{{1, 0}}) + y2.block_idempotent(Composition{{0, 1}}) == y2.unit());
  const YAlgebra y = cyc(2, 2, {Rational(0)});
  YElement total;
  for (const auto& mu : enumerate_compositions(2, 2)) {
    const YElement e = y.block_idempotent(mu);
    total += e;
    for (const auto& b : y.enumerate_basis()) {
      CHECK(y.multiply(e, y.monomial(b)) == y.multiply(y.monomial(b), e));
    }
  }
  CHECK(total == y.unit());
}

TEST_CASE("forms on basis monomials") {
  const YAlgebra y1 = cyc(3, 2, {Rational(2)});
  CHECK(y1.form_tau_hat(y1.unit()).is_one());
  CHECK(y1.form_rho_hat_n(y1.unit()) == CycScalar(3, 9));
  const YAlgebra y = cyc(2, 2, {Rational(0), Rational(1)});
  CHECK(y.form_tau_hat(y.multiply(y.f(0), y.multiply(y.x(0), y.x(1)))).is_zero());
  CHECK(y.form_tau_hat(y.multiply(y.t(0), y.multiply(y.x(0), y.x(1)))).is_zero());
  for (const auto& m : y.enumerate_basis()) {
    const CycScalar value = y.form_rho_hat_n(y.monomial(m));
    const bool top = m.w.is_identity() && m.x == std::vector<int>{1, 1};
    CHECK(value == CycScalar(2, top ? 1 : 0));
    CHECK(value == CycScalar(2, 4) * y.form_tau_hat(y.monomial(m)));
  }
}

TEST_CASE("basis sizes") {
  CHECK(cyc(1, 1, {Rational(0)}).enumerate_basis().size() == 1);
  CHECK(cyc(2, 2, {Rational(0), Rational(1)}).enumerate_basis().size() == 32);
  CHECK(cyc(3, 2, {Rational(0), Rational(1)}).dimension() == 72);
  CHECK_THROWS_AS(YAlgebra(YParams::affine(2, 2)).enumerate_basis(), std::invalid_argument);
  CHECK(YAlgebra(YParams::affine(2, 2)).enumerate_basis(1).size() == 4 * 3 * 2);
}

TEST_CASE("associativity at (2,2,2)") {
  const YAlgebra y = cyc(2, 2, {Rational(0), Rational(1)});
  const auto basis = y.enumerate_basis();
  std::size_t failures = 0;
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      const YElement ab = y.multiply(y.monomial(a), y.monomial(b));
      for (const auto& c : basis) {
        if (y.multiply(ab, y.monomial(c)) != y.multiply(y.monomial(a), y.multiply(y.monomial(b), y.monomial(c)))) {
          ++failures;
        }
      }
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("agreement with the t-presentation oracle") {
  struct Case {
    int r, n;
    std::vector<Rational> v;
  };
  for (const auto& c : {Case{2, 2, {Rational(0), Rational(1)}}, Case{1, 3, {Rational(0), Rational(2)}},
                        Case{3, 2, {Rational(1)}}}) {
    const YAlgebra y = cyc(c.r, c.n, c.v);
    const testing::TOracle oracle(c.r, c.n, c.v);
    std::size_t failures = 0;
    for (const auto& a : y.enumerate_basis()) {
      CHECK(oracle.from_e_basis(y.monomial(a)) == y.to_t_basis(y.monomial(a)));
      for (const auto& b : y.enumerate_basis()) {
        const YElement ea = y.monomial(a), eb = y.monomial(b);
        if (oracle.multiply(oracle.from_e_basis(ea), oracle.from_e_basis(eb)) !=
            oracle.from_e_basis(y.multiply(ea, eb))) {
          ++failures;
        }
      }
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("affine products against the oracle") {
  const YAlgebra y(YParams::affine(2, 2));
  const testing::TOracle oracle(2, 2, {});
  const auto basis = y.enumerate_basis(2);
  std::size_t failures = 0;
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      const YElement ea = y.monomial(a), eb = y.monomial(b);
      if (oracle.multiply_affine(oracle.from_e_basis(ea), oracle.from_e_basis(eb)) !=
          oracle.from_e_basis(y.multiply(ea, eb))) {
        ++failures;
      }
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("input validation") {
  const YAlgebra y = cyc(2, 2, {Rational(0)});
  CHECK_THROWS_AS(y.monomial(YMonomial{Character{{1, 3}}, {0, 0}, Permutation::identity(2)}), std::invalid_argument);
  CHECK_THROWS_AS(y.monomial(YMonomial{Character{{1}}, {0, 0}, Permutation::identity(2)}), std::invalid_argument);
  CHECK_THROWS_AS(y.monomial(YMonomial{Character{{1, 1}}, {0, 0}, Permutation::identity(2)}, CycScalar(3, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(YAlgebra(YParams::affine(2, 2)).dimension(), std::invalid_argument);
}

TEST_CASE("associativity at (2,2,1) and random triples at (2,2,2)") {
  const YAlgebra small = cyc(2, 2, {Rational(0)});
  const auto sb = small.enumerate_basis();
  std::size_t failures = 0;
  for (const auto& a : sb) {
    for (const auto& b : sb) {
      for (const auto& c : sb) {
        const YElement ea = small.monomial(a), eb = small.monomial(b), ec = small.monomial(c);
        if (small.multiply(small.multiply(ea, eb), ec) != small.multiply(ea, small.multiply(eb, ec))) ++failures;
      }
    }
  }
  const YAlgebra y = cyc(2, 2, {Rational(0), Rational(1)});
  const auto basis = y.enumerate_basis();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int k = 0; k < 10000; ++k) {
    const YElement ea = y.monomial(basis[pick(rng)]), eb = y.monomial(basis[pick(rng)]),
                   ec = y.monomial(basis[pick(rng)]);
    if (y.multiply(y.multiply(ea, eb), ec) != y.multiply(ea, y.multiply(eb, ec))) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("unit law and closure of the basis") {
  const YAlgebra y = cyc(3, 2, {Rational(0), Rational(1)});
  const auto basis = y.enumerate_basis();
  for (const auto& a : basis) {
    const YElement e = y.monomial(a);
    CHECK(e == YElement(a, CycScalar(3, 1)));
    CHECK(y.multiply(y.unit(), e) == e);
    CHECK(y.multiply(e, y.unit()) == e);
    for (const auto& b : basis) {
      const YElement p = y.multiply(e, y.monomial(b));
      for (const auto& [m, c] : p.terms()) {
        CHECK(std::binary_search(basis.begin(), basis.end(), m));
      }
    }
  }
}

TEST_CASE("conjugating idempotents") {
  for (int n = 1; n <= 3; ++n) {
    const YAlgebra y = cyc(2, n, {Rational(0)});
    for (const auto& w : all_permutations(n)) {
      for (const auto& chi : all_characters(2, n)) {
        CHECK(y.multiply(y.multiply(y.f(w), y.idempotent(chi)), y.f(w.inverse())) == y.idempotent(act(w, chi)));
      }
    }
  }
}
