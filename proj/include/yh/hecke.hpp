#ifndef YH_HECKE_HPP
#define YH_HECKE_HPP

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "yh/combinatorics.hpp"
#include "yh/linear_combination.hpp"
#include "yh/scalar.hpp"
#include "yh/yokonuma.hpp"

namespace yh {

/// Parameters of H^mu = H_{mu_1} (x) ... (x) H_{mu_r}, realised on
/// n = |mu| global strands with permutations confined to the Young subgroup.
/// `field_order` fixes the coefficient field Q(zeta_field_order).
struct HParams {
  Composition blocks;
  Variant variant = Variant::Cyclotomic;
  std::vector<Rational> v;
  int field_order = 1;

  static HParams single(int n, std::vector<Rational> v, int field_order = 1) {
    return {Composition{{n}}, Variant::Cyclotomic, std::move(v), field_order};
  }

  bool is_cyclotomic() const { return variant == Variant::Cyclotomic; }
  int d() const { return static_cast<int>(v.size()); }
  int n() const { return blocks.size(); }
  friend bool operator==(const HParams&, const HParams&) = default;
};

/// x^x w with w in the Young subgroup of the blocks.
struct HMonomial {
  std::vector<int> x;
  Permutation w;

  friend auto operator<=>(const HMonomial&, const HMonomial&) = default;
  friend bool operator==(const HMonomial&, const HMonomial&) = default;
};

using HElement = LinearCombination<HMonomial>;

/// Square matrix over H^mu whose rows and columns are the characters with
/// composition mu, in lexicographic order.
class MatrixOverH {
 public:
  MatrixOverH() = default;
  explicit MatrixOverH(Composition mu);

  const Composition& mu() const { return mu_; }
  std::size_t size() const { return index_.size(); }
  const std::vector<Character>& index() const { return index_; }
  std::size_t position(const Character& chi) const;

  HElement& at(std::size_t row, std::size_t col) { return entries_[row * size() + col]; }
  const HElement& at(std::size_t row, std::size_t col) const { return entries_[row * size() + col]; }
  HElement& at(const Character& row, const Character& col) { return at(position(row), position(col)); }
  const HElement& at(const Character& row, const Character& col) const {
    return at(position(row), position(col));
  }

  bool is_zero() const;
  MatrixOverH& operator+=(const MatrixOverH& other);
  MatrixOverH& operator*=(const CycScalar& s);
  friend bool operator==(const MatrixOverH&, const MatrixOverH&) = default;

 private:
  Composition mu_;
  std::vector<Character> index_;
  std::vector<HElement> entries_;
};

/// Degenerate affine / cyclotomic Hecke algebra H^mu of type A.  Same
/// rewriting scheme as YAlgebra with the crossing correction equal to 1; the
/// cyclotomic relation is imposed on the first strand of every block.
class HAlgebra {
 public:
  explicit HAlgebra(HParams params);

  const HParams& params() const { return params_; }
  int n() const { return params_.n(); }
  int d() const { return params_.d(); }
  int order() const { return params_.field_order; }
  const Composition& blocks() const { return params_.blocks; }
  bool is_cyclotomic() const { return params_.is_cyclotomic(); }

  CycScalar scalar(const Rational& q) const { return CycScalar(order(), q); }
  HElement unit() const;
  HElement monomial(const HMonomial& m, const CycScalar& c) const;
  HElement monomial(const HMonomial& m) const { return monomial(m, scalar(1)); }
  HElement x(int j) const;
  HElement s(int i) const;

  HElement multiply(const HElement& a, const HElement& b) const;
  HElement normal_form(const HElement& a) const;

  // tau_n on a single block (at most one nonzero part in the composition).
  CycScalar form_tau_n(const HElement& a) const;
  // Product of the per-block tau values on each monomial.
  CycScalar form_tau_mu(const HElement& a) const;

  std::vector<HMonomial> enumerate_basis(std::optional<int> degree_bound = std::nullopt) const;
  std::size_t dimension() const;

  MatrixOverH identity_matrix() const;
  MatrixOverH matrix_unit(const Character& row, const Character& col, const HElement& entry) const;
  MatrixOverH multiply(const MatrixOverH& a, const MatrixOverH& b) const;
  HElement trace(const MatrixOverH& a) const;
  CycScalar trace_form(const MatrixOverH& a) const;

  void validate(const HElement& a) const;

 private:
  using Tail = std::map<HMonomial, Integer>;
  struct OverflowTerm {
    std::vector<int> x;
    Permutation w;
    Rational coeff;
  };

  Tail push_through(const Permutation& w, const std::vector<int>& b) const;
  void accumulate_reduced(std::map<HMonomial, Rational>& out, HMonomial m, const Rational& c) const;
  void build_overflow_tables();
  CycScalar block_tau(int block, const HMonomial& m) const;

  HParams params_;
  std::vector<std::vector<OverflowTerm>> overflow_;
};

}  // namespace yh

#endif  // YH_HECKE_HPP
