#ifndef YH_SCALAR_HPP
#define YH_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace yh {

// Arbitrary-precision rational, always kept canonical (reduced, positive
// denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q".  Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

// Coefficients of the r-th cyclotomic polynomial, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(int r);

int euler_phi(int r);

/// An element of Q(zeta_r), stored as a polynomial in zeta of degree below
/// phi(r) with rational coefficients.
///
/// Scalars of different orders never mix: every binary operation requires
/// matching orders and throws std::invalid_argument otherwise.
class CycScalar {
 public:
  CycScalar() : CycScalar(1) {}
  explicit CycScalar(int order);
  CycScalar(int order, const Rational& value);
  CycScalar(int order, std::vector<Rational> coeffs);

  // zeta_a = zeta^(a-1) for 1 <= a <= r.
  static CycScalar zeta(int order, int index);
  // zeta^k for any integer k.
  static CycScalar zeta_power(int order, long k);

  int order() const { return order_; }
  std::span<const Rational> coefficients() const { return coeffs_; }
  bool is_zero() const;
  bool is_one() const;
  // True when the value lies in Q; rational_value() then returns it.
  bool is_rational() const;
  Rational rational_value() const;

  CycScalar inverse() const;

  CycScalar& operator+=(const CycScalar& other);
  CycScalar& operator-=(const CycScalar& other);
  CycScalar& operator*=(const CycScalar& other);
  CycScalar& operator/=(const CycScalar& other);
  CycScalar& operator*=(const Rational& factor);

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
  friend CycScalar operator*(CycScalar a, const Rational& b) { return a *= b; }
  friend CycScalar operator*(const Rational& b, CycScalar a) { return a *= b; }
  CycScalar operator-() const;

  friend bool operator==(const CycScalar& a, const CycScalar& b);

  std::string to_string() const;

 private:
  void check_order(const CycScalar& other) const;

  int order_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycScalar& value);

}  // namespace yh

#endif  // YH_SCALAR_HPP
