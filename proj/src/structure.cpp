#include "yh/structure.hpp"

#include <stdexcept>

namespace yh {
namespace {

template <class Monomial, class Fn>
std::vector<CycScalar> evaluate_on_basis(const std::vector<Monomial>& basis, Fn&& fn) {
  std::vector<CycScalar> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(fn(b));
  return out;
}

Matrix scalar_matrix(int order, const Rational& value) {
  Matrix m(1, 1, order);
  m(0, 0) = CycScalar(order, value);
  return m;
}

struct LocalModule {
  std::size_t dim = 1;
  std::vector<Matrix> x;  // one per strand of the block
  std::vector<Matrix> s;  // one per adjacent pair inside the block
};

LocalModule local_module(int size, const MultiPartition& label, const std::vector<Rational>& v, int order) {
  if (label.size() != size) throw std::invalid_argument("representation label does not match block size");
  if (static_cast<int>(label.components.size()) != static_cast<int>(v.size())) {
    throw std::invalid_argument("representation label must have d components");
  }
  LocalModule mod;
  if (size == 0) return mod;
  std::vector<int> ones;
  for (std::size_t k = 0; k < label.components.size(); ++k) {
    const Partition& p = label.components[k];
    if (p.empty()) continue;
    if (size == 1 || p == Partition{1}) {
      ones.push_back(static_cast<int>(k));
      continue;
    }
    if (p == Partition{2} || p == Partition{1, 1}) {
      const int sign = p == Partition{2} ? 1 : -1;
      mod.x = {scalar_matrix(order, v[k]), scalar_matrix(order, v[k] + sign)};
      mod.s = {scalar_matrix(order, sign)};
      return mod;
    }
    throw std::invalid_argument("unsupported representation label");
  }
  if (size == 1) {
    mod.x = {scalar_matrix(order, v[ones.at(0)])};
    return mod;
  }
  if (size != 2 || ones.size() != 2) {
    throw std::invalid_argument("built-in representations cover blocks of size <= 2 only");
  }
  const Rational a = v[ones[0]];
  const Rational b = v[ones[1]];
  if (a == b) throw std::domain_error("2-dimensional module needs distinct parameters");
  const Rational p = Rational(1) / (b - a);
  mod.dim = 2;
  Matrix x1(2, 2, order), x2(2, 2, order), s(2, 2, order);
  x1(0, 0) = CycScalar(order, a);
  x1(1, 1) = CycScalar(order, b);
  x2(0, 0) = CycScalar(order, b);
  x2(1, 1) = CycScalar(order, a);
  s(0, 0) = CycScalar(order, p);
  s(0, 1) = CycScalar(order, 1 - p * p);
  s(1, 0) = CycScalar(order, 1);
  s(1, 1) = CycScalar(order, -p);
  mod.x = {x1, x2};
  mod.s = {s};
  return mod;
}

}  // namespace

AlgebraTable structure_table(const YAlgebra& y, std::size_t max_dim) {
  if (y.dimension() > max_dim) {
    throw BoundExceeded("algebra dimension " + std::to_string(y.dimension()) + " exceeds bound " +
                        std::to_string(max_dim));
  }
  return detail::build_table(y, y.enumerate_basis(), y.r());
}

AlgebraTable structure_table(const HAlgebra& h, std::size_t max_dim) {
  if (h.dimension() > max_dim) {
    throw BoundExceeded("algebra dimension " + std::to_string(h.dimension()) + " exceeds bound " +
                        std::to_string(max_dim));
  }
  return detail::build_table(h, h.enumerate_basis(), h.order());
}

AlgebraTable permute_basis(const AlgebraTable& table, const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> new_index(table.dim);
  for (std::size_t k = 0; k < perm.size(); ++k) new_index[perm[k]] = k;
  AlgebraTable out{table.order, table.dim, {}};
  out.products.reserve(table.products.size());
  for (std::size_t i = 0; i < table.dim; ++i) {
    for (std::size_t j = 0; j < table.dim; ++j) {
      SparseVector coords;
      for (const auto& [k, c] : table.product(perm[i], perm[j])) coords.emplace_back(new_index[k], c);
      out.products.push_back(std::move(coords));
    }
  }
  return out;
}

Representation permute_basis(const Representation& rep, const std::vector<std::size_t>& perm) {
  Representation out{rep.dimension, {}};
  for (std::size_t k : perm) out.action.push_back(rep.action.at(k));
  return out;
}

std::vector<CycScalar> permute_basis(const std::vector<CycScalar>& form, const std::vector<std::size_t>& perm) {
  std::vector<CycScalar> out;
  for (std::size_t k : perm) out.push_back(form.at(k));
  return out;
}

std::vector<CycScalar> tau_hat_values(const YAlgebra& y) {
  return evaluate_on_basis(y.enumerate_basis(), [&](const YMonomial& b) { return y.form_tau_hat(y.monomial(b)); });
}

std::vector<CycScalar> rho_hat_n_values(const YAlgebra& y) {
  return evaluate_on_basis(y.enumerate_basis(), [&](const YMonomial& b) { return y.form_rho_hat_n(y.monomial(b)); });
}

std::vector<CycScalar> rho_n_values(const Isomorphism& iso) {
  const YAlgebra& y = iso.yokonuma();
  return evaluate_on_basis(y.enumerate_basis(), [&](const YMonomial& b) { return form_rho_n(iso, y.monomial(b)); });
}

std::vector<CycScalar> tau_n_values(const HAlgebra& h) {
  return evaluate_on_basis(h.enumerate_basis(), [&](const HMonomial& b) { return h.form_tau_n(h.monomial(b)); });
}

std::vector<CycScalar> tau_mu_values(const HAlgebra& h) {
  return evaluate_on_basis(h.enumerate_basis(), [&](const HMonomial& b) { return h.form_tau_mu(h.monomial(b)); });
}

GramData gram_matrix(const AlgebraTable& table, const std::vector<CycScalar>& form, std::string form_name) {
  if (form.size() != table.dim) throw std::invalid_argument("gram_matrix: form does not match the basis");
  GramData g{std::move(form_name), Matrix(table.dim, table.dim, table.order)};
  for (std::size_t i = 0; i < table.dim; ++i) {
    for (std::size_t j = 0; j < table.dim; ++j) {
      CycScalar value(table.order);
      for (const auto& [k, c] : table.product(i, j)) {
        if (!form[k].is_zero()) value += c * form[k];
      }
      g.gram(i, j) = value;
    }
  }
  return g;
}

Matrix dual_basis(const GramData& gram) {
  auto inv = inverse(gram.gram);
  if (!inv) throw std::domain_error("form '" + gram.form_name + "' is degenerate: Gram matrix is singular");
  return *inv;
}

CycScalar form_rho_n(const Isomorphism& iso, const YElement& e) {
  CycScalar value(iso.yokonuma().r());
  for (const auto& [mu, mat] : iso.phi_full(e)) value += iso.hecke(mu).trace_form(mat);
  return value;
}

RhoFormComparison compare_rho_forms(const Isomorphism& iso) {
  const YAlgebra& y = iso.yokonuma();
  RhoFormComparison report;
  for (const auto& b : y.enumerate_basis()) {
    const YElement e = y.monomial(b);
    CycScalar lhs = y.form_rho_hat_n(e);
    CycScalar rhs = form_rho_n(iso, e);
    ++report.checked;
    if (lhs != rhs) report.discrepancies.push_back({b, std::move(lhs), std::move(rhs)});
  }
  return report;
}

Rational semisimplicity_product(int n, const std::vector<Rational>& v) {
  Rational prod = Rational(Integer(factorial(n)));
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      for (int l = -n + 1; l < n; ++l) prod *= Rational(l) + v[i] - v[j];
    }
  }
  return prod;
}

bool semisimplicity_criterion(int n, const std::vector<Rational>& v) { return semisimplicity_product(n, v) != 0; }

bool semisimplicity_criterion(const YParams& params) {
  if (!params.is_cyclotomic()) throw std::invalid_argument("semisimplicity_criterion requires the cyclotomic variant");
  return semisimplicity_criterion(params.n, params.v);
}

bool radical_oracle(const AlgebraTable& table, std::size_t max_dim) {
  if (table.dim > max_dim) {
    throw BoundExceeded("radical oracle: dimension " + std::to_string(table.dim) + " exceeds bound " +
                        std::to_string(max_dim));
  }
  // trace(L_{b_k}) = sum_m coefficient of b_m in b_k b_m.
  std::vector<CycScalar> traces(table.dim, CycScalar(table.order));
  for (std::size_t k = 0; k < table.dim; ++k) {
    for (std::size_t m = 0; m < table.dim; ++m) {
      for (const auto& [idx, c] : table.product(k, m)) {
        if (idx == m) traces[k] += c;
      }
    }
  }
  Matrix form(table.dim, table.dim, table.order);
  for (std::size_t i = 0; i < table.dim; ++i) {
    for (std::size_t j = 0; j < table.dim; ++j) {
      for (const auto& [k, c] : table.product(i, j)) form(i, j) += c * traces[k];
    }
  }
  return rank(form) == table.dim;
}

bool satisfies_module_axioms(const AlgebraTable& table, const Representation& rep) {
  if (rep.action.size() != table.dim) return false;
  for (const auto& m : rep.action) {
    if (m.rows() != rep.dimension || m.cols() != rep.dimension) return false;
  }
  for (std::size_t i = 0; i < table.dim; ++i) {
    for (std::size_t j = 0; j < table.dim; ++j) {
      Matrix expected(rep.dimension, rep.dimension, table.order);
      for (const auto& [k, c] : table.product(i, j)) expected += c * rep.action[k];
      if (rep.action[i] * rep.action[j] != expected) return false;
    }
  }
  return true;
}

bool is_absolutely_irreducible(const Representation& rep) {
  const std::size_t k = rep.dimension;
  if (rep.action.empty()) return false;
  Matrix span(rep.action.size(), k * k, rep.action.front().order());
  for (std::size_t b = 0; b < rep.action.size(); ++b) {
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = 0; q < k; ++q) span(b, p * k + q) = rep.action[b](p, q);
    }
  }
  return rank(span) == k * k;
}

std::vector<CycScalar> character_of(const Representation& rep) {
  std::vector<CycScalar> out;
  for (const auto& m : rep.action) out.push_back(m.trace());
  return out;
}

CycScalar schur_element(const AlgebraTable& table, const Matrix& dual, const Representation& rep) {
  if (rep.action.size() != table.dim || dual.rows() != table.dim) {
    throw std::invalid_argument("schur_element: representation does not match the algebra");
  }
  const auto chi = character_of(rep);
  // sum_b chi(b) b^v = sum_k (sum_b chi(b) dual(k, b)) b_k.
  Matrix z(rep.dimension, rep.dimension, table.order);
  for (std::size_t k = 0; k < table.dim; ++k) {
    CycScalar coeff(table.order);
    for (std::size_t b = 0; b < table.dim; ++b) {
      if (!chi[b].is_zero() && !dual(k, b).is_zero()) coeff += chi[b] * dual(k, b);
    }
    if (!coeff.is_zero()) z += coeff * rep.action[k];
  }
  auto s = z.scalar_multiple_of_identity();
  if (!s) throw std::domain_error("schur_element: central element does not act as a scalar");
  return *s;
}

CycScalar schur_element(const AlgebraTable& table, const GramData& gram, const Representation& rep) {
  return schur_element(table, dual_basis(gram), rep);
}

Representation builtin_hecke_representation(const HAlgebra& h, const std::vector<MultiPartition>& labels) {
  const Composition& mu = h.blocks();
  if (static_cast<int>(labels.size()) != mu.length()) {
    throw std::invalid_argument("builtin_hecke_representation: need one label per block");
  }
  if (!h.is_cyclotomic()) throw std::invalid_argument("builtin_hecke_representation: cyclotomic variant only");
  const int order = h.order();
  std::vector<LocalModule> local;
  std::size_t dim = 1;
  for (int a = 0; a < mu.length(); ++a) {
    local.push_back(local_module(mu.parts[a], labels[a], h.params().v, order));
    dim *= local.back().dim;
  }
  // Lift a block-local matrix to the tensor product.
  auto lift = [&](int block, const Matrix& m) {
    Matrix out = Matrix::identity(1, order);
    for (int a = 0; a < mu.length(); ++a) {
      out = kronecker(out, a == block ? m : Matrix::identity(local[a].dim, order));
    }
    return out;
  };
  std::vector<Matrix> xs(h.n());
  std::vector<Matrix> ss(h.n() > 0 ? h.n() - 1 : 0);
  for (int a = 0; a < mu.length(); ++a) {
    const int start = mu.block_start(a);
    for (int j = 0; j < mu.parts[a]; ++j) xs[start + j] = lift(a, local[a].x[j]);
    for (int i = 0; i + 1 < mu.parts[a]; ++i) ss[start + i] = lift(a, local[a].s[i]);
  }
  Representation rep{dim, {}};
  for (const auto& b : h.enumerate_basis()) {
    Matrix m = Matrix::identity(dim, order);
    for (int j = 0; j < h.n(); ++j) {
      for (int p = 0; p < b.x[j]; ++p) m = m * xs[j];
    }
    for (int i : b.w.reduced_word()) m = m * ss.at(i);
    rep.action.push_back(std::move(m));
  }
  return rep;
}

SchurProductReport schur_product_check(const Isomorphism& iso, const std::vector<MultiPartition>& labels) {
  const YAlgebra& y = iso.yokonuma();
  const AlgebraTable table = structure_table(y);
  const Matrix dual = dual_basis(gram_matrix(table, rho_n_values(iso), "rho_n"));
  return schur_product_check(iso, labels, table, dual);
}

SchurProductReport schur_product_check(const Isomorphism& iso, const std::vector<MultiPartition>& labels,
                                       const AlgebraTable& y_table, const Matrix& y_rho_dual) {
  const YAlgebra& y = iso.yokonuma();
  SchurProductReport report;
  report.labels = labels;
  for (const auto& l : labels) report.mu.parts.push_back(l.size());
  if (report.mu.length() != y.r() || report.mu.size() != y.n()) {
    throw std::invalid_argument("schur_product_check: labels do not form an r-tuple of total size n");
  }
  report.product = y.scalar(1);
  for (int a = 0; a < report.mu.length(); ++a) {
    const HAlgebra component(HParams::single(report.mu.parts[a], y.params().v, y.r()));
    const AlgebraTable t = structure_table(component);
    const auto rep = builtin_hecke_representation(component, {labels[a]});
    report.component_schur.push_back(schur_element(t, gram_matrix(t, tau_n_values(component), "tau_n"), rep));
    report.product *= report.component_schur.back();
  }
  const HAlgebra& block = iso.hecke(report.mu);
  const AlgebraTable bt = structure_table(block);
  const auto block_rep = builtin_hecke_representation(block, labels);
  report.block_schur = schur_element(bt, gram_matrix(bt, tau_mu_values(block), "tau_mu"), block_rep);

  const auto transported = iso.transport_module(report.mu, block_rep);
  report.transported_dimension = transported.dimension;
  report.transported_schur = schur_element(y_table, y_rho_dual, transported);
  report.matches = report.product == report.block_schur && report.product == report.transported_schur;
  return report;
}

DimensionIdentity dimension_identity_check(int r, int n, int d) {
  DimensionIdentity out;
  std::int64_t dn = 1;
  std::int64_t rdn = 1;
  for (int i = 0; i < n; ++i) {
    dn *= d;
    rdn *= static_cast<std::int64_t>(r) * d;
  }
  out.lhs = rdn * factorial(n);
  for (const auto& mu : enumerate_compositions(r, n)) {
    const std::int64_t m = m_mu(mu);
    std::int64_t young = 1;
    for (int p : mu.parts) young *= factorial(p);
    out.rhs += m * m * dn * young;
  }
  return out;
}

}  // namespace yh
