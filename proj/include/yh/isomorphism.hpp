#ifndef YH_ISOMORPHISM_HPP
#define YH_ISOMORPHISM_HPP

#include <map>
#include <vector>

#include "yh/hecke.hpp"
#include "yh/representation.hpp"
#include "yh/yokonuma.hpp"

namespace yh {

/// Image of an element under the full map: one matrix over H^mu per
/// r-composition mu of n (zero matrices included).
using FullImage = std::map<Composition, MatrixOverH>;

/// The block-by-block isomorphism between Y (affine or cyclotomic) and the
/// direct sum of Mat_{m_mu}(H^mu):
///
///   E_chi x^a f_w  |->  1_{chi, w^{-1}(chi)} x^{pi_chi^{-1} a} (pi_chi^{-1} w pi_{w^{-1}(chi)})
///   1_{chi, chi'} x^a w  |->  E_chi x^{pi_chi a} f_{pi_chi w pi_chi'^{-1}}
///
/// where pi_chi is the minimal coset representative carrying chi0(mu) to chi
/// and exponent vectors are permuted by (w.a)_i = a_{w^{-1}(i)}.
class Isomorphism {
 public:
  explicit Isomorphism(YAlgebra y);

  const YAlgebra& yokonuma() const { return y_; }
  const HAlgebra& hecke(const Composition& mu) const;
  const std::vector<Composition>& compositions() const { return compositions_; }
  const Permutation& coset_rep(const Character& chi) const;

  // Terms must all lie in block mu.
  MatrixOverH phi_mu(const Composition& mu, const YElement& e) const;
  YElement psi_mu(const MatrixOverH& m) const;

  // E_mu * e, computed by multiplication in Y.
  YElement block_component(const Composition& mu, const YElement& e) const;
  FullImage phi_full(const YElement& e) const;
  YElement psi_full(const FullImage& image) const;
  FullImage multiply(const FullImage& a, const FullImage& b) const;

  // Pulls a representation of H^mu (indexed by hecke(mu).enumerate_basis())
  // back along phi_mu; the result is indexed by yokonuma().enumerate_basis()
  // and has dimension m_mu times the input dimension.
  Representation transport_module(const Composition& mu, const Representation& rep) const;

 private:
  YAlgebra y_;
  std::vector<Composition> compositions_;
  std::map<Composition, HAlgebra> hecke_;
  std::map<Character, Permutation> pi_;
};

}  // namespace yh

#endif  // YH_ISOMORPHISM_HPP
