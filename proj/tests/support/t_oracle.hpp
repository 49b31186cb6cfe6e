#ifndef YH_TESTS_T_ORACLE_HPP
#define YH_TESTS_T_ORACLE_HPP

#include <map>
#include <vector>

#include "yh/yokonuma.hpp"

namespace yh::testing {

// Brute-force multiplier in the t^j x^a f_w presentation.  Products are formed
// by right multiplication with single generators using only the defining
// relations; the cyclotomic quotient is taken by Gaussian elimination against
// a spanning set of the two-sided ideal generated by (x_1 - v_1)...(x_1 - v_d).
class TOracle {
 public:
  TOracle(int r, int n, std::vector<Rational> v);

  TElement multiply_affine(const TElement& a, const TElement& b) const;
  // Cyclotomic normal form (all x-exponents < d).
  TElement reduce(const TElement& a) const;
  TElement multiply(const TElement& a, const TElement& b) const { return reduce(multiply_affine(a, b)); }

  // E_chi = prod_j (1/r) sum_s zeta^{-(chi_j - 1) s} t_j^s, expanded independently.
  TElement from_e_basis(const YElement& a) const;

 private:
  using Row = std::map<TMonomial, CycScalar>;

  TElement times_t(const TElement& a, int k) const;
  TElement times_f(const TElement& a, int i) const;
  TElement times_x(const TElement& a, int k) const;
  const TElement& f_times_x(const Permutation& w, int k) const;
  TElement f_times_e(const Permutation& w, int i) const;
  TElement g_of_x1() const;
  bool overflows(const TMonomial& m) const;
  const std::vector<Row>& ideal(int degree) const;

  int r_;
  int n_;
  std::vector<Rational> v_;
  mutable std::map<std::pair<Permutation, int>, TElement> fx_cache_;
  mutable std::map<int, std::vector<Row>> ideal_cache_;
};

}  // namespace yh::testing

#endif
