#include "yh/hecke.hpp"

#include <algorithm>
#include <stdexcept>

#include "yh/divided_difference.hpp"

namespace yh {
namespace {

std::vector<int> add_exponents(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

MatrixOverH::MatrixOverH(Composition mu) : mu_(std::move(mu)), index_(characters_of(mu_)) {
  entries_.resize(index_.size() * index_.size());
}

std::size_t MatrixOverH::position(const Character& chi) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), chi);
  if (it == index_.end() || *it != chi) {
    throw std::out_of_range("MatrixOverH: character " + to_string(chi) + " not in block " + to_string(mu_));
  }
  return static_cast<std::size_t>(it - index_.begin());
}

bool MatrixOverH::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const HElement& h) { return h.is_zero(); });
}

MatrixOverH& MatrixOverH::operator+=(const MatrixOverH& other) {
  if (mu_ != other.mu_) throw std::invalid_argument("MatrixOverH: block mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

MatrixOverH& MatrixOverH::operator*=(const CycScalar& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

HAlgebra::HAlgebra(HParams params) : params_(std::move(params)) {
  if (params_.field_order < 1) throw std::invalid_argument("HAlgebra: field order must be positive");
  for (int p : params_.blocks.parts) {
    if (p < 0) throw std::invalid_argument("HAlgebra: negative block size");
  }
  if (params_.is_cyclotomic() && params_.v.empty()) {
    throw std::invalid_argument("HAlgebra: cyclotomic variant needs d >= 1 parameters");
  }
  build_overflow_tables();
}

void HAlgebra::validate(const HElement& a) const {
  for (const auto& [m, c] : a.terms()) {
    bool ok = static_cast<int>(m.x.size()) == n() && m.w.size() == n() && c.order() == order();
    for (int e : m.x) ok = ok && e >= 0;
    if (!ok) throw std::invalid_argument("HAlgebra: element does not match parameters");
    if (!in_young_subgroup(m.w, blocks())) {
      throw std::invalid_argument("HAlgebra: permutation " + to_string(m.w) + " leaves the Young subgroup of " +
                                  to_string(blocks()));
    }
  }
}

HAlgebra::Tail HAlgebra::push_through(const Permutation& w, const std::vector<int>& b) const {
  Tail out;
  const auto descent = w.left_descent();
  if (!descent) {
    out.emplace(HMonomial{b, w}, Integer(1));
    return out;
  }
  const int i = *descent;
  const Permutation si = Permutation::simple(n(), i);
  auto bump = [&](HMonomial key, const Integer& c) {
    auto [it, inserted] = out.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  for (const auto& [m, c] : push_through(si * w, b)) {
    std::vector<int> swapped = m.x;
    std::swap(swapped[i], swapped[i + 1]);
    bump(HMonomial{std::move(swapped), si * m.w}, c);
    for (auto& [e, k] : divided_difference(m.x, i)) bump(HMonomial{std::move(e), m.w}, c * k);
  }
  return out;
}

void HAlgebra::build_overflow_tables() {
  if (!is_cyclotomic()) return;
  const int dd = d();
  std::vector<Rational> g{Rational(1)};
  for (const auto& root : params_.v) {
    std::vector<Rational> next(g.size() + 1, 0);
    for (std::size_t m = 0; m < g.size(); ++m) {
      next[m + 1] += g[m];
      next[m] -= root * g[m];
    }
    g = std::move(next);
  }
  overflow_.assign(n(), {});
  for (int j = 0; j < n(); ++j) {
    const int block = blocks().block_of(j);
    if (j == blocks().block_start(block)) {
      for (int m = 0; m < dd; ++m) {
        if (g[m] == 0) continue;
        std::vector<int> x(n(), 0);
        x[j] = m;
        overflow_[j].push_back({std::move(x), Permutation::identity(n()), -g[m]});
      }
      continue;
    }
    const int i = j - 1;
    const Permutation si = Permutation::simple(n(), i);
    std::map<HMonomial, Rational> acc;
    for (const auto& term : overflow_[i]) {
      for (const auto& [m, k] : push_through(si, term.x)) acc[HMonomial{m.x, m.w * term.w * si}] += term.coeff * k;
    }
    for (int m = 0; m < dd; ++m) {
      std::vector<int> x(n(), 0);
      x[i] = m;
      x[j] = dd - 1 - m;
      acc[HMonomial{std::move(x), si}] += 1;
    }
    for (auto& [m, c] : acc) {
      if (c == 0) continue;
      for (int e : m.x) {
        if (e >= dd) throw std::logic_error("overflow table is not reduced");
      }
      overflow_[j].push_back({m.x, m.w, c});
    }
  }
}

void HAlgebra::accumulate_reduced(std::map<HMonomial, Rational>& out, HMonomial m, const Rational& c) const {
  int strand = -1;
  if (is_cyclotomic()) {
    for (int j = 0; j < n(); ++j) {
      if (m.x[j] >= d()) {
        strand = j;
        break;
      }
    }
  }
  if (strand < 0) {
    out[std::move(m)] += c;
    return;
  }
  m.x[strand] -= d();
  for (const auto& term : overflow_[strand]) {
    accumulate_reduced(out, HMonomial{add_exponents(m.x, term.x), term.w * m.w}, c * term.coeff);
  }
}

HElement HAlgebra::multiply(const HElement& a, const HElement& b) const {
  validate(a);
  validate(b);
  HElement out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      std::map<HMonomial, Rational> acc;
      for (const auto& [m, k] : push_through(ma.w, mb.x)) {
        accumulate_reduced(acc, HMonomial{add_exponents(ma.x, m.x), m.w * mb.w}, Rational(k));
      }
      const CycScalar scale = ca * cb;
      for (const auto& [m, k] : acc) {
        if (k != 0) out.add(m, scale * k);
      }
    }
  }
  return out;
}

HElement HAlgebra::normal_form(const HElement& a) const {
  validate(a);
  HElement out;
  for (const auto& [m, c] : a.terms()) {
    std::map<HMonomial, Rational> acc;
    accumulate_reduced(acc, m, Rational(1));
    for (const auto& [mm, k] : acc) {
      if (k != 0) out.add(mm, c * k);
    }
  }
  return out;
}

HElement HAlgebra::unit() const {
  return HElement(HMonomial{std::vector<int>(n(), 0), Permutation::identity(n())}, scalar(1));
}

HElement HAlgebra::monomial(const HMonomial& m, const CycScalar& c) const { return normal_form(HElement(m, c)); }

HElement HAlgebra::x(int j) const {
  if (j < 0 || j >= n()) throw std::out_of_range("x: strand out of range");
  std::vector<int> e(n(), 0);
  e[j] = 1;
  return monomial(HMonomial{e, Permutation::identity(n())});
}

HElement HAlgebra::s(int i) const {
  return monomial(HMonomial{std::vector<int>(n(), 0), Permutation::simple(n(), i)});
}

CycScalar HAlgebra::form_tau_n(const HElement& a) const {
  if (!is_cyclotomic()) throw std::invalid_argument("form_tau_n requires the cyclotomic variant");
  const auto nonzero = std::count_if(blocks().parts.begin(), blocks().parts.end(), [](int p) { return p > 0; });
  if (nonzero > 1) throw std::invalid_argument("form_tau_n: element lives on more than one block");
  const HMonomial top{std::vector<int>(n(), d() - 1), Permutation::identity(n())};
  return normal_form(a).coefficient(top, order());
}

CycScalar HAlgebra::block_tau(int block, const HMonomial& m) const {
  const int start = blocks().block_start(block);
  const int end = start + blocks().parts[block];
  for (int j = start; j < end; ++j) {
    if (m.x[j] != d() - 1 || m.w(j) != j) return scalar(0);
  }
  return scalar(1);
}

CycScalar HAlgebra::form_tau_mu(const HElement& a) const {
  if (!is_cyclotomic()) throw std::invalid_argument("form_tau_mu requires the cyclotomic variant");
  CycScalar value(order());
  for (const HElement reduced = normal_form(a); const auto& [m, c] : reduced.terms()) {
    CycScalar prod = scalar(1);
    for (int b = 0; b < blocks().length() && !prod.is_zero(); ++b) prod *= block_tau(b, m);
    value += c * prod;
  }
  return value;
}

std::vector<HMonomial> HAlgebra::enumerate_basis(std::optional<int> degree_bound) const {
  int max_entry = 0;
  if (is_cyclotomic()) {
    max_entry = d() - 1;
  } else {
    if (!degree_bound || *degree_bound < 0) {
      throw std::invalid_argument("enumerate_basis: the affine variant needs a degree bound");
    }
    max_entry = *degree_bound;
  }
  const auto group = young_subgroup(blocks());
  std::vector<HMonomial> out;
  std::vector<int> cur(n(), 0);
  while (true) {
    int total = 0;
    for (int c : cur) total += c;
    if (is_cyclotomic() || total <= *degree_bound) {
      for (const auto& w : group) out.push_back(HMonomial{cur, w});
    }
    int j = n() - 1;
    while (j >= 0 && cur[j] == max_entry) cur[j--] = 0;
    if (j < 0) break;
    ++cur[j];
  }
  return out;
}

std::size_t HAlgebra::dimension() const {
  if (!is_cyclotomic()) throw std::invalid_argument("dimension requires the cyclotomic variant");
  std::size_t dim = 1;
  for (int j = 0; j < n(); ++j) dim *= static_cast<std::size_t>(d());
  for (int p : blocks().parts) dim *= static_cast<std::size_t>(factorial(p));
  return dim;
}

MatrixOverH HAlgebra::identity_matrix() const {
  MatrixOverH m(blocks());
  for (std::size_t i = 0; i < m.size(); ++i) m.at(i, i) = unit();
  return m;
}

MatrixOverH HAlgebra::matrix_unit(const Character& row, const Character& col, const HElement& entry) const {
  MatrixOverH m(blocks());
  m.at(row, col) = entry;
  return m;
}

MatrixOverH HAlgebra::multiply(const MatrixOverH& a, const MatrixOverH& b) const {
  if (a.mu() != blocks() || b.mu() != blocks()) throw std::invalid_argument("MatrixOverH: block mismatch");
  MatrixOverH out(blocks());
  const std::size_t m = a.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (b.at(k, j).is_zero()) continue;
        out.at(i, j) += multiply(a.at(i, k), b.at(k, j));
      }
    }
  }
  return out;
}

HElement HAlgebra::trace(const MatrixOverH& a) const {
  HElement t;
  for (std::size_t i = 0; i < a.size(); ++i) t += a.at(i, i);
  return t;
}

CycScalar HAlgebra::trace_form(const MatrixOverH& a) const {
  if (a.mu() != blocks()) throw std::invalid_argument("MatrixOverH: block mismatch");
  return form_tau_mu(trace(a));
}

}  // namespace yh
