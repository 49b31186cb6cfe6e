#ifndef YH_YOKONUMA_HPP
#define YH_YOKONUMA_HPP

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "yh/combinatorics.hpp"
#include "yh/linear_combination.hpp"
#include "yh/scalar.hpp"

namespace yh {

enum class Variant { Affine, Cyclotomic };

/// Parameters of the degenerate affine Yokonuma-Hecke algebra or of its
/// cyclotomic quotient of level d = v.size().
struct YParams {
  int r = 1;
  int n = 1;
  Variant variant = Variant::Cyclotomic;
  std::vector<Rational> v;

  static YParams affine(int r, int n) { return {r, n, Variant::Affine, {}}; }
  static YParams cyclotomic(int r, int n, std::vector<Rational> v) {
    return {r, n, Variant::Cyclotomic, std::move(v)};
  }

  bool is_cyclotomic() const { return variant == Variant::Cyclotomic; }
  int d() const { return static_cast<int>(v.size()); }
  friend bool operator==(const YParams&, const YParams&) = default;
};

/// E_chi x^x f_w in the idempotent basis.
struct YMonomial {
  Character chi;
  std::vector<int> x;
  Permutation w;

  friend auto operator<=>(const YMonomial&, const YMonomial&) = default;
  friend bool operator==(const YMonomial&, const YMonomial&) = default;
};

/// t^t x^x f_w in the torus-generator basis; t exponents lie in 0..r-1.
struct TMonomial {
  std::vector<int> t;
  std::vector<int> x;
  Permutation w;

  friend auto operator<=>(const TMonomial&, const TMonomial&) = default;
  friend bool operator==(const TMonomial&, const TMonomial&) = default;
};

using YElement = LinearCombination<YMonomial>;
using TElement = LinearCombination<TMonomial>;

/// Degenerate affine / cyclotomic Yokonuma-Hecke algebra over Q(zeta_r).
///
/// Elements are kept in the basis E_chi x^a f_w.  Products are computed by
/// moving f_w across x^b one crossing at a time; the crossing correction e_i
/// acts on E_chi as 1 or 0.  In the cyclotomic variant every x_j^d is
/// replaced by a precomputed normal form of strictly lower degree.
///
/// Immutable after construction; all member functions are const and safe to
/// call concurrently.
class YAlgebra {
 public:
  explicit YAlgebra(YParams params);

  const YParams& params() const { return params_; }
  int r() const { return params_.r; }
  int n() const { return params_.n; }
  int d() const { return params_.d(); }
  bool is_cyclotomic() const { return params_.is_cyclotomic(); }

  CycScalar scalar(const Rational& q) const { return CycScalar(params_.r, q); }

  YElement zero() const { return {}; }
  YElement unit() const;
  // The single term c * E_chi x^x f_w, reduced to normal form.
  YElement monomial(const YMonomial& m, const CycScalar& c) const;
  YElement monomial(const YMonomial& m) const { return monomial(m, scalar(1)); }

  YElement t(int j) const;  // 0-based strand
  YElement x(int j) const;
  YElement f(int i) const;  // s_i swaps strands i, i+1
  YElement f(const Permutation& w) const;
  YElement e(int i) const;

  // E_chi as an element, and expanded in t-monomials.
  YElement idempotent(const Character& chi) const;
  TElement idempotent_t(const Character& chi) const;
  YElement block_idempotent(const Composition& mu) const;

  YElement multiply(const YElement& a, const YElement& b) const;
  YElement normal_form(const YElement& a) const;
  // Rewrites a monomial carrying some exponent >= d; cyclotomic only.
  YElement cyclotomic_reduce(const YMonomial& m) const;

  TElement to_t_basis(const YElement& a) const;
  YElement from_t_basis(const TElement& a) const;

  // Value 1 on t^0 x^(d-1,...,d-1) f_1, 0 on every other t-basis monomial.
  CycScalar form_tau_hat(const YElement& a) const;
  // r^n times form_tau_hat.
  CycScalar form_rho_hat_n(const YElement& a) const;

  // Basis in increasing monomial order.  The affine variant needs a bound on
  // the total x-degree.
  std::vector<YMonomial> enumerate_basis(std::optional<int> degree_bound = std::nullopt) const;
  std::size_t dimension() const;

  void validate(const YElement& a) const;

 private:
  // (x-exponents, permutation) -> integer coefficient.
  using Tail = std::map<std::pair<std::vector<int>, Permutation>, Integer>;
  struct OverflowTerm {
    std::vector<int> x;
    Permutation w;
    Rational coeff;
  };

  // E_chi f_w x^b = sum E_chi x^g f_u.
  Tail push_through(const Character& chi, const Permutation& w, const std::vector<int>& b) const;
  void accumulate_reduced(std::map<YMonomial, Rational>& out, YMonomial m, const Rational& c) const;
  std::map<YMonomial, Rational> multiply_monomials(const YMonomial& a, const YMonomial& b) const;
  void build_overflow_tables();
  void check_cyclotomic(const char* what) const;

  YParams params_;
  std::vector<Character> characters_;
  // overflow_[j][chi]: normal form of E_chi x_j^d.
  std::vector<std::map<Character, std::vector<OverflowTerm>>> overflow_;
};

}  // namespace yh

#endif  // YH_YOKONUMA_HPP
