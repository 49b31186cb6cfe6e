#ifndef YH_STRUCTURE_HPP
#define YH_STRUCTURE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "yh/errors.hpp"
#include "yh/hecke.hpp"
#include "yh/isomorphism.hpp"
#include "yh/linalg.hpp"
#include "yh/representation.hpp"
#include "yh/yokonuma.hpp"

namespace yh {

using SparseVector = std::vector<std::pair<std::size_t, CycScalar>>;

/// Structure constants of a finite-dimensional algebra in a fixed basis:
/// product(i, j) holds the coordinates of b_i * b_j.
struct AlgebraTable {
  int order = 1;
  std::size_t dim = 0;
  std::vector<SparseVector> products;

  const SparseVector& product(std::size_t i, std::size_t j) const { return products[i * dim + j]; }
};

namespace detail {

template <class Algebra, class Monomial>
AlgebraTable build_table(const Algebra& algebra, const std::vector<Monomial>& basis, int order) {
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  AlgebraTable table{order, basis.size(), {}};
  table.products.reserve(basis.size() * basis.size());
  std::vector<LinearCombination<Monomial>> elements;
  elements.reserve(basis.size());
  for (const auto& b : basis) elements.push_back(algebra.monomial(b));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      SparseVector coords;
      const auto product = algebra.multiply(elements[i], elements[j]);
      for (const auto& [m, c] : product.terms()) {
        coords.emplace_back(index.at(m), c);
      }
      table.products.push_back(std::move(coords));
    }
  }
  return table;
}

}  // namespace detail

// Tables refuse algebras above max_dim (BoundExceeded).
AlgebraTable structure_table(const YAlgebra& y, std::size_t max_dim = 512);
AlgebraTable structure_table(const HAlgebra& h, std::size_t max_dim = 512);
// Re-indexes the basis: new basis element k is old basis element perm[k].
AlgebraTable permute_basis(const AlgebraTable& table, const std::vector<std::size_t>& perm);
Representation permute_basis(const Representation& rep, const std::vector<std::size_t>& perm);
std::vector<CycScalar> permute_basis(const std::vector<CycScalar>& form, const std::vector<std::size_t>& perm);

// Values of a linear form on the enumerated basis.
std::vector<CycScalar> tau_hat_values(const YAlgebra& y);
std::vector<CycScalar> rho_hat_n_values(const YAlgebra& y);
std::vector<CycScalar> rho_n_values(const Isomorphism& iso);
std::vector<CycScalar> tau_n_values(const HAlgebra& h);
std::vector<CycScalar> tau_mu_values(const HAlgebra& h);

struct GramData {
  std::string form_name;
  Matrix gram;
};

// gram(i, j) = form(b_i * b_j).
GramData gram_matrix(const AlgebraTable& table, const std::vector<CycScalar>& form, std::string form_name);
// Column j holds the coordinates of the dual element b_j^v, so that
// form(b_i * b_j^v) = delta_ij.  Throws std::domain_error if the form is
// degenerate.
Matrix dual_basis(const GramData& gram);

// rho_n = sum over blocks of tau^mu(Tr(phi_mu(E_mu e))).
CycScalar form_rho_n(const Isomorphism& iso, const YElement& e);

struct FormDiscrepancy {
  YMonomial monomial;
  CycScalar rho_hat_n;
  CycScalar rho_n;
};

struct RhoFormComparison {
  std::size_t checked = 0;
  std::vector<FormDiscrepancy> discrepancies;
};

// Compares rho_hat_n and rho_n on every basis monomial.
RhoFormComparison compare_rho_forms(const Isomorphism& iso);

// n! * prod_{i<j} prod_{-n<l<n} (l + v_i - v_j), exactly.
Rational semisimplicity_product(int n, const std::vector<Rational>& v);
bool semisimplicity_criterion(const YParams& params);
bool semisimplicity_criterion(int n, const std::vector<Rational>& v);

// Non-degeneracy of (a, b) -> trace(L_{ab}) on the regular representation.
// Valid in characteristic zero.
bool radical_oracle(const AlgebraTable& table, std::size_t max_dim = 256);

bool satisfies_module_axioms(const AlgebraTable& table, const Representation& rep);
// The action matrices span the full matrix algebra.
bool is_absolutely_irreducible(const Representation& rep);
// trace(action[i]) for every basis element.
std::vector<CycScalar> character_of(const Representation& rep);

// Scalar by which sum_b trace(rep(b)) b^v acts.  Throws std::domain_error if
// that action is not a scalar matrix.
CycScalar schur_element(const AlgebraTable& table, const Matrix& dual, const Representation& rep);
CycScalar schur_element(const AlgebraTable& table, const GramData& gram, const Representation& rep);

/// Built-in simple modules of H^mu for blocks of size <= 2, labelled by one
/// d-partition per block.  Block of size 1 with (1) in slot k: x -> v_k.
/// Size 2: (2) in slot k gives s -> 1, (1,1) gives s -> -1 (x_1 -> v_k,
/// x_2 = s x_1 s + s); (1) in slots k < l gives the 2-dimensional module with
/// x_1 -> diag(v_k, v_l).  The result is indexed by h.enumerate_basis().
Representation builtin_hecke_representation(const HAlgebra& h, const std::vector<MultiPartition>& labels);

struct SchurProductReport {
  Composition mu;
  std::vector<MultiPartition> labels;
  std::vector<CycScalar> component_schur;  // per block, w.r.t. tau_{mu_a}
  CycScalar product;                       // product of component values
  CycScalar block_schur;                   // H^mu module w.r.t. tau^mu
  CycScalar transported_schur;             // transported Y-module w.r.t. rho_n
  std::size_t transported_dimension = 0;
  bool matches = false;
};

SchurProductReport schur_product_check(const Isomorphism& iso, const std::vector<MultiPartition>& labels);
// Same, reusing the structure table of Y and the dual basis of rho_n.
SchurProductReport schur_product_check(const Isomorphism& iso, const std::vector<MultiPartition>& labels,
                                       const AlgebraTable& y_table, const Matrix& y_rho_dual);

struct DimensionIdentity {
  std::int64_t lhs = 0;  // (r d)^n n!
  std::int64_t rhs = 0;  // sum_mu m_mu^2 d^n prod mu_a!
  bool holds() const { return lhs == rhs; }
};

DimensionIdentity dimension_identity_check(int r, int n, int d);

}  // namespace yh

#endif  // YH_STRUCTURE_HPP
