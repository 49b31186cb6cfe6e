#include "yh/isomorphism.hpp"

#include <stdexcept>

namespace yh {

Isomorphism::Isomorphism(YAlgebra y) : y_(std::move(y)), compositions_(enumerate_compositions(y_.r(), y_.n())) {
  for (const auto& mu : compositions_) {
    HParams hp{mu, y_.params().variant, y_.params().v, y_.r()};
    hecke_.emplace(mu, HAlgebra(std::move(hp)));
  }
  for (const auto& chi : all_characters(y_.r(), y_.n())) pi_.emplace(chi, pi_chi(chi, y_.r()));
}

const HAlgebra& Isomorphism::hecke(const Composition& mu) const {
  auto it = hecke_.find(mu);
  if (it == hecke_.end()) throw std::out_of_range("no block " + to_string(mu));
  return it->second;
}

const Permutation& Isomorphism::coset_rep(const Character& chi) const {
  auto it = pi_.find(chi);
  if (it == pi_.end()) throw std::out_of_range("unknown character " + to_string(chi));
  return it->second;
}

MatrixOverH Isomorphism::phi_mu(const Composition& mu, const YElement& e) const {
  y_.validate(e);
  MatrixOverH out(mu);
  for (const auto& [m, c] : e.terms()) {
    if (comp_of(m.chi, y_.r()) != mu) {
      throw std::invalid_argument("phi_mu: term with character " + to_string(m.chi) + " lies outside block " +
                                  to_string(mu));
    }
    const Character col = act(m.w.inverse(), m.chi);
    const Permutation pi_inv = coset_rep(m.chi).inverse();
    const Permutation h = pi_inv * m.w * coset_rep(col);
    if (!in_young_subgroup(h, mu)) {
      throw std::logic_error("phi_mu: " + to_string(h) + " is not in the Young subgroup of " + to_string(mu));
    }
    out.at(m.chi, col).add(HMonomial{permute_exponents(pi_inv, m.x), h}, c);
  }
  return out;
}

YElement Isomorphism::psi_mu(const MatrixOverH& mat) const {
  const Composition& mu = mat.mu();
  if (mu.length() != y_.r() || mu.size() != y_.n()) throw std::invalid_argument("psi_mu: malformed block");
  const HAlgebra& h = hecke(mu);
  YElement out;
  for (std::size_t i = 0; i < mat.size(); ++i) {
    const Character& row = mat.index()[i];
    const Permutation& pi_row = coset_rep(row);
    for (std::size_t j = 0; j < mat.size(); ++j) {
      const HElement& entry = mat.at(i, j);
      if (entry.is_zero()) continue;
      h.validate(entry);
      const Permutation pi_col_inv = coset_rep(mat.index()[j]).inverse();
      for (const auto& [m, c] : entry.terms()) {
        out.add(YMonomial{row, permute_exponents(pi_row, m.x), pi_row * m.w * pi_col_inv}, c);
      }
    }
  }
  return out;
}

YElement Isomorphism::block_component(const Composition& mu, const YElement& e) const {
  return y_.multiply(y_.block_idempotent(mu), e);
}

FullImage Isomorphism::phi_full(const YElement& e) const {
  FullImage out;
  for (const auto& mu : compositions_) out.emplace(mu, phi_mu(mu, block_component(mu, e)));
  return out;
}

YElement Isomorphism::psi_full(const FullImage& image) const {
  YElement out;
  for (const auto& [mu, mat] : image) out += psi_mu(mat);
  return out;
}

FullImage Isomorphism::multiply(const FullImage& a, const FullImage& b) const {
  FullImage out;
  for (const auto& mu : compositions_) {
    auto ia = a.find(mu);
    auto ib = b.find(mu);
    if (ia == a.end() || ib == b.end()) throw std::invalid_argument("FullImage: missing block " + to_string(mu));
    out.emplace(mu, hecke(mu).multiply(ia->second, ib->second));
  }
  return out;
}

Representation Isomorphism::transport_module(const Composition& mu, const Representation& rep) const {
  const HAlgebra& h = hecke(mu);
  const auto h_basis = h.enumerate_basis();
  if (rep.action.size() != h_basis.size()) {
    throw std::invalid_argument("transport_module: representation does not cover the basis of H^mu");
  }
  std::map<HMonomial, std::size_t> index;
  for (std::size_t i = 0; i < h_basis.size(); ++i) index.emplace(h_basis[i], i);

  const std::size_t k = rep.dimension;
  const std::size_t m = static_cast<std::size_t>(m_mu(mu));
  const YElement block = y_.block_idempotent(mu);
  Representation out{k * m, {}};
  for (const auto& b : y_.enumerate_basis()) {
    const MatrixOverH image = phi_mu(mu, y_.multiply(block, y_.monomial(b)));
    Matrix action(k * m, k * m, y_.r());
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        for (const auto& [hm, c] : image.at(i, j).terms()) {
          const Matrix& piece = rep.action.at(index.at(hm));
          for (std::size_t p = 0; p < k; ++p) {
            for (std::size_t q = 0; q < k; ++q) action(i * k + p, j * k + q) += c * piece(p, q);
          }
        }
      }
    }
    out.action.push_back(std::move(action));
  }
  return out;
}

}  // namespace yh
