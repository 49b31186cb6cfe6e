#include "t_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace yh::testing {
namespace {

int total_degree(const std::vector<int>& x) { return std::accumulate(x.begin(), x.end(), 0); }

// All exponent vectors of length n with total degree <= bound.
void exponents_upto(int n, int bound, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= bound; ++e) {
    cur.push_back(e);
    exponents_upto(n, bound - e, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> all_t_exponents(int r, int n) {
  std::vector<std::vector<int>> out{{}};
  for (int j = 0; j < n; ++j) {
    std::vector<std::vector<int>> next;
    for (const auto& p : out) {
      for (int s = 0; s < r; ++s) {
        auto q = p;
        q.push_back(s);
        next.push_back(q);
      }
    }
    out = std::move(next);
  }
  return out;
}

// Rightmost i with w(i) > w(i+1), so that w = (w s_i) s_i with l(w s_i) < l(w).
int right_descent(const Permutation& w) {
  for (int i = w.size() - 2; i >= 0; --i) {
    if (w(i) > w(i + 1)) return i;
  }
  return -1;
}

}  // namespace

TOracle::TOracle(int r, int n, std::vector<Rational> v) : r_(r), n_(n), v_(std::move(v)) {}

TElement TOracle::times_t(const TElement& a, int k) const {
  TElement out;
  for (const auto& [m, c] : a.terms()) {
    TMonomial next = m;
    int& e = next.t[m.w(k)];
    e = (e + 1) % r_;
    out.add(next, c);
  }
  return out;
}

TElement TOracle::times_f(const TElement& a, int i) const {
  TElement out;
  for (const auto& [m, c] : a.terms()) {
    TMonomial next = m;
    next.w = m.w * Permutation::simple(n_, i);
    out.add(next, c);
  }
  return out;
}

TElement TOracle::f_times_e(const Permutation& w, int i) const {
  TElement out;
  const CycScalar weight(r_, Rational(1, r_));
  for (int s = 0; s < r_; ++s) {
    TMonomial m{std::vector<int>(n_, 0), std::vector<int>(n_, 0), w};
    m.t[w(i)] = (m.t[w(i)] + s) % r_;
    m.t[w(i + 1)] = (m.t[w(i + 1)] + r_ - s) % r_;
    out.add(m, weight);
  }
  return out;
}

const TElement& TOracle::f_times_x(const Permutation& w, int k) const {
  const auto key = std::make_pair(w, k);
  if (auto it = fx_cache_.find(key); it != fx_cache_.end()) return it->second;
  TElement out;
  const int i = right_descent(w);
  if (i < 0) {
    TMonomial m{std::vector<int>(n_, 0), std::vector<int>(n_, 0), w};
    m.x[k] = 1;
    out.add(m, CycScalar(r_, 1));
  } else {
    const Permutation shorter = w * Permutation::simple(n_, i);
    if (k == i + 1) {
      // f_i x_{i+1} = x_i f_i + e_i
      out = times_f(f_times_x(shorter, i), i);
      out += f_times_e(shorter, i);
    } else if (k == i) {
      // f_i x_i = x_{i+1} f_i - e_i
      out = times_f(f_times_x(shorter, i + 1), i);
      out -= f_times_e(shorter, i);
    } else {
      out = times_f(f_times_x(shorter, k), i);
    }
  }
  return fx_cache_.emplace(key, std::move(out)).first->second;
}

TElement TOracle::times_x(const TElement& a, int k) const {
  TElement out;
  for (const auto& [m, c] : a.terms()) {
    for (const auto& [p, d] : f_times_x(m.w, k).terms()) {
      TMonomial next{m.t, m.x, p.w};
      for (int j = 0; j < n_; ++j) {
        next.t[j] = (next.t[j] + p.t[j]) % r_;
        next.x[j] += p.x[j];
      }
      out.add(next, c * d);
    }
  }
  return out;
}

TElement TOracle::multiply_affine(const TElement& a, const TElement& b) const {
  TElement out;
  for (const auto& [m, c] : b.terms()) {
    TElement acc = a;
    acc *= c;
    for (int k = 0; k < n_; ++k) {
      for (int s = 0; s < m.t[k]; ++s) acc = times_t(acc, k);
    }
    for (int k = 0; k < n_; ++k) {
      for (int s = 0; s < m.x[k]; ++s) acc = times_x(acc, k);
    }
    for (int i : m.w.reduced_word()) acc = times_f(acc, i);
    out += acc;
  }
  return out;
}

TElement TOracle::g_of_x1() const {
  // Expand prod_k (x_1 - v_k) as coefficients in x_1.
  std::vector<Rational> poly{Rational(1)};
  for (const Rational& root : v_) {
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t p = 0; p < poly.size(); ++p) {
      next[p + 1] += poly[p];
      next[p] -= root * poly[p];
    }
    poly = std::move(next);
  }
  TElement out;
  for (std::size_t p = 0; p < poly.size(); ++p) {
    if (poly[p] == 0) continue;
    TMonomial m{std::vector<int>(n_, 0), std::vector<int>(n_, 0), Permutation::identity(n_)};
    m.x[0] = static_cast<int>(p);
    out.add(m, CycScalar(r_, poly[p]));
  }
  return out;
}

bool TOracle::overflows(const TMonomial& m) const {
  const int d = static_cast<int>(v_.size());
  return std::any_of(m.x.begin(), m.x.end(), [d](int e) { return e >= d; });
}

const std::vector<TOracle::Row>& TOracle::ideal(int degree) const {
  if (auto it = ideal_cache_.find(degree); it != ideal_cache_.end()) return it->second;
  const int d = static_cast<int>(v_.size());
  const TElement g = g_of_x1();
  std::vector<Row> rows;
  const auto perms = all_permutations(n_);
  const auto ts = all_t_exponents(r_, n_);
  for (int left = 0; left + d <= degree; ++left) {
    std::vector<std::vector<int>> lx, rx;
    std::vector<int> cur;
    exponents_upto(n_, left, cur, lx);
    exponents_upto(n_, degree - d - left, cur, rx);
    for (const auto& a : lx) {
      if (total_degree(a) != left) continue;
      for (const auto& t : ts) {
        for (const auto& w : perms) {
          TElement u;
          u.add(TMonomial{t, a, w}, CycScalar(r_, 1));
          const TElement ug = multiply_affine(u, g);
          for (const auto& b : rx) {
            for (const auto& v : perms) {
              TElement right;
              right.add(TMonomial{std::vector<int>(n_, 0), b, v}, CycScalar(r_, 1));
              const TElement gen = multiply_affine(ug, right);
              rows.emplace_back(gen.terms().begin(), gen.terms().end());
            }
          }
        }
      }
    }
  }
  // Echelon form with pivots on the largest overflowing monomial of each row.
  std::vector<Row> echelon;
  std::map<TMonomial, std::size_t> pivot_of;
  for (Row row : rows) {
    while (true) {
      auto it = std::find_if(row.rbegin(), row.rend(), [&](const auto& kv) { return overflows(kv.first); });
      if (it == row.rend()) break;
      const TMonomial lead = it->first;
      auto p = pivot_of.find(lead);
      if (p == pivot_of.end()) {
        const CycScalar inv = it->second.inverse();
        for (auto& [m, c] : row) c *= inv;
        pivot_of.emplace(lead, echelon.size());
        echelon.push_back(std::move(row));
        break;
      }
      const CycScalar factor = row.at(lead);
      for (const auto& [m, c] : echelon[p->second]) {
        CycScalar& slot = row.try_emplace(m, CycScalar(r_)).first->second;
        slot -= factor * c;
        if (slot.is_zero()) row.erase(m);
      }
    }
  }
  return ideal_cache_.emplace(degree, std::move(echelon)).first->second;
}

TElement TOracle::reduce(const TElement& a) const {
  int degree = 0;
  for (const auto& [m, c] : a.terms()) degree = std::max(degree, total_degree(m.x));
  if (degree < static_cast<int>(v_.size())) return a;
  const auto& rows = ideal(degree);
  std::map<TMonomial, std::size_t> pivot_of;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    auto it = std::find_if(rows[k].rbegin(), rows[k].rend(), [&](const auto& kv) { return overflows(kv.first); });
    pivot_of.emplace(it->first, k);
  }
  Row row(a.terms().begin(), a.terms().end());
  while (true) {
    auto it = std::find_if(row.rbegin(), row.rend(), [&](const auto& kv) { return overflows(kv.first); });
    if (it == row.rend()) break;
    auto p = pivot_of.find(it->first);
    if (p == pivot_of.end()) throw std::logic_error("t-oracle: ideal spanning set misses an overflow monomial");
    const CycScalar factor = it->second;
    for (const auto& [m, c] : rows[p->second]) {
      CycScalar& slot = row.try_emplace(m, CycScalar(r_)).first->second;
      slot -= factor * c;
      if (slot.is_zero()) row.erase(m);
    }
  }
  TElement out;
  for (const auto& [m, c] : row) out.add(m, c);
  return out;
}

TElement TOracle::from_e_basis(const YElement& a) const {
  TElement out;
  const CycScalar weight(r_, Rational(1, r_));
  for (const auto& [m, c] : a.terms()) {
    TElement e;
    e.add(TMonomial{std::vector<int>(n_, 0), m.x, m.w}, c);
    for (int j = 0; j < n_; ++j) {
      TElement next;
      for (const auto& [p, coeff] : e.terms()) {
        for (int s = 0; s < r_; ++s) {
          TMonomial q = p;
          q.t[j] = s;
          next.add(q, coeff * weight * CycScalar::zeta_power(r_, -static_cast<long>(m.chi.values[j] - 1) * s));
        }
      }
      e = std::move(next);
    }
    out += e;
  }
  return out;
}

}  // namespace yh::testing
