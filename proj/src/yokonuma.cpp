#include "yh/yokonuma.hpp"

#include <stdexcept>
#include <string>

#include "yh/divided_difference.hpp"

namespace yh {
namespace {

std::vector<int> add_exponents(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// Coefficients of prod_k (z - v_k), lowest degree first.
std::vector<Rational> cyclotomic_relation(const std::vector<Rational>& v) {
  std::vector<Rational> g{Rational(1)};
  for (const auto& root : v) {
    std::vector<Rational> next(g.size() + 1, 0);
    for (std::size_t m = 0; m < g.size(); ++m) {
      next[m + 1] += g[m];
      next[m] -= root * g[m];
    }
    g = std::move(next);
  }
  return g;
}

std::vector<std::vector<int>> exponent_vectors(int n, int max_entry, std::optional<int> degree_bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  while (true) {
    int total = 0;
    for (int c : cur) total += c;
    if (!degree_bound || total <= *degree_bound) out.push_back(cur);
    int j = n - 1;
    while (j >= 0 && cur[j] == max_entry) cur[j--] = 0;
    if (j < 0) break;
    ++cur[j];
  }
  return out;
}

}  // namespace

YAlgebra::YAlgebra(YParams params) : params_(std::move(params)) {
  if (params_.r < 1 || params_.n < 1) throw std::invalid_argument("YAlgebra: need r >= 1 and n >= 1");
  if (params_.is_cyclotomic() && params_.v.empty()) {
    throw std::invalid_argument("YAlgebra: cyclotomic variant needs d >= 1 parameters");
  }
  if (!params_.is_cyclotomic() && !params_.v.empty()) {
    throw std::invalid_argument("YAlgebra: affine variant takes no parameters");
  }
  characters_ = all_characters(params_.r, params_.n);
  build_overflow_tables();
}

void YAlgebra::check_cyclotomic(const char* what) const {
  if (!is_cyclotomic()) throw std::invalid_argument(std::string(what) + " requires the cyclotomic variant");
}

void YAlgebra::validate(const YElement& a) const {
  for (const auto& [m, c] : a.terms()) {
    bool ok = m.chi.size() == n() && static_cast<int>(m.x.size()) == n() && m.w.size() == n() &&
              c.order() == r();
    for (int v : m.chi.values) ok = ok && v >= 1 && v <= r();
    for (int e : m.x) ok = ok && e >= 0;
    if (!ok) throw std::invalid_argument("YAlgebra: element does not match parameters");
  }
}

YAlgebra::Tail YAlgebra::push_through(const Character& chi, const Permutation& w, const std::vector<int>& b) const {
  Tail out;
  const auto descent = w.left_descent();
  if (!descent) {
    out.emplace(std::make_pair(b, w), Integer(1));
    return out;
  }
  const int i = *descent;
  const Permutation si = Permutation::simple(n(), i);
  // E_chi f_w x^b = E_chi f_i (E_{s_i chi} f_{s_i w} x^b).
  const Tail inner = push_through(act(si, chi), si * w, b);
  const bool same_colour = chi.values[i] == chi.values[i + 1];
  auto bump = [&](std::pair<std::vector<int>, Permutation> key, const Integer& c) {
    auto [it, inserted] = out.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  for (const auto& [key, c] : inner) {
    const auto& [g, u] = key;
    std::vector<int> swapped = g;
    std::swap(swapped[i], swapped[i + 1]);
    bump({std::move(swapped), si * u}, c);
    if (same_colour) {
      for (auto& [e, k] : divided_difference(g, i)) bump({std::move(e), u}, c * k);
    }
  }
  return out;
}

void YAlgebra::build_overflow_tables() {
  if (!is_cyclotomic()) return;
  const int dd = d();
  const auto g = cyclotomic_relation(params_.v);
  overflow_.assign(n(), {});
  for (const auto& chi : characters_) {
    auto& list = overflow_[0][chi];
    for (int m = 0; m < dd; ++m) {
      if (g[m] == 0) continue;
      std::vector<int> x(n(), 0);
      x[0] = m;
      list.push_back({std::move(x), Permutation::identity(n()), -g[m]});
    }
  }
  // x_{i+1}^d = f_i x_i^d f_i + e_i sum_m x_i^m x_{i+1}^{d-1-m} f_i.
  for (int i = 0; i + 1 < n(); ++i) {
    const Permutation si = Permutation::simple(n(), i);
    for (const auto& chi : characters_) {
      std::map<std::pair<std::vector<int>, Permutation>, Rational> acc;
      for (const auto& term : overflow_[i].at(act(si, chi))) {
        for (const auto& [key, k] : push_through(chi, si, term.x)) {
          acc[{key.first, key.second * term.w * si}] += term.coeff * k;
        }
      }
      if (chi.values[i] == chi.values[i + 1]) {
        for (int m = 0; m < dd; ++m) {
          std::vector<int> x(n(), 0);
          x[i] = m;
          x[i + 1] = dd - 1 - m;
          acc[{std::move(x), si}] += 1;
        }
      }
      auto& list = overflow_[i + 1][chi];
      for (auto& [key, c] : acc) {
        if (c == 0) continue;
        for (int e : key.first) {
          if (e >= dd) throw std::logic_error("overflow table is not reduced");
        }
        list.push_back({key.first, key.second, c});
      }
    }
  }
}

void YAlgebra::accumulate_reduced(std::map<YMonomial, Rational>& out, YMonomial m, const Rational& c) const {
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
  // Each substitution strictly lowers the total x-degree.
  m.x[strand] -= d();
  for (const auto& term : overflow_[strand].at(m.chi)) {
    accumulate_reduced(out, YMonomial{m.chi, add_exponents(m.x, term.x), term.w * m.w}, c * term.coeff);
  }
}

std::map<YMonomial, Rational> YAlgebra::multiply_monomials(const YMonomial& a, const YMonomial& b) const {
  std::map<YMonomial, Rational> out;
  if (act(a.w, b.chi) != a.chi) return out;
  for (const auto& [key, k] : push_through(a.chi, a.w, b.x)) {
    accumulate_reduced(out, YMonomial{a.chi, add_exponents(a.x, key.first), key.second * b.w}, Rational(k));
  }
  return out;
}

YElement YAlgebra::multiply(const YElement& a, const YElement& b) const {
  validate(a);
  validate(b);
  YElement out;
  for (const auto& [ma, ca] : a.terms()) {
    // Only terms of b whose character is w_a^{-1}(chi_a) survive.
    const Character needed = act(ma.w.inverse(), ma.chi);
    const auto& bt = b.terms();
    for (auto it = bt.lower_bound(YMonomial{needed, {}, {}}); it != bt.end() && it->first.chi == needed; ++it) {
      const CycScalar scale = ca * it->second;
      for (const auto& [m, k] : multiply_monomials(ma, it->first)) {
        if (k != 0) out.add(m, scale * k);
      }
    }
  }
  return out;
}

YElement YAlgebra::normal_form(const YElement& a) const {
  validate(a);
  YElement out;
  for (const auto& [m, c] : a.terms()) {
    std::map<YMonomial, Rational> reduced;
    accumulate_reduced(reduced, m, Rational(1));
    for (const auto& [mm, k] : reduced) {
      if (k != 0) out.add(mm, c * k);
    }
  }
  return out;
}

YElement YAlgebra::cyclotomic_reduce(const YMonomial& m) const {
  check_cyclotomic("cyclotomic_reduce");
  return normal_form(YElement(m, scalar(1)));
}

YElement YAlgebra::unit() const {
  YElement out;
  for (const auto& chi : characters_) {
    out.add(YMonomial{chi, std::vector<int>(n(), 0), Permutation::identity(n())}, scalar(1));
  }
  return out;
}

YElement YAlgebra::monomial(const YMonomial& m, const CycScalar& c) const { return normal_form(YElement(m, c)); }

YElement YAlgebra::t(int j) const {
  if (j < 0 || j >= n()) throw std::out_of_range("t: strand out of range");
  YElement out;
  for (const auto& chi : characters_) {
    out.add(YMonomial{chi, std::vector<int>(n(), 0), Permutation::identity(n())},
            CycScalar::zeta(r(), chi.values[j]));
  }
  return out;
}

YElement YAlgebra::x(int j) const {
  if (j < 0 || j >= n()) throw std::out_of_range("x: strand out of range");
  YElement out;
  std::vector<int> e(n(), 0);
  e[j] = 1;
  for (const auto& chi : characters_) out.add(YMonomial{chi, e, Permutation::identity(n())}, scalar(1));
  return normal_form(out);
}

YElement YAlgebra::f(const Permutation& w) const {
  if (w.size() != n()) throw std::invalid_argument("f: permutation size mismatch");
  YElement out;
  for (const auto& chi : characters_) out.add(YMonomial{chi, std::vector<int>(n(), 0), w}, scalar(1));
  return out;
}

YElement YAlgebra::f(int i) const { return f(Permutation::simple(n(), i)); }

YElement YAlgebra::e(int i) const {
  if (i < 0 || i + 1 >= n()) throw std::out_of_range("e: index out of range");
  YElement out;
  for (const auto& chi : characters_) {
    if (chi.values[i] == chi.values[i + 1]) {
      out.add(YMonomial{chi, std::vector<int>(n(), 0), Permutation::identity(n())}, scalar(1));
    }
  }
  return out;
}

YElement YAlgebra::idempotent(const Character& chi) const {
  return YElement(YMonomial{chi, std::vector<int>(n(), 0), Permutation::identity(n())}, scalar(1));
}

TElement YAlgebra::idempotent_t(const Character& chi) const { return to_t_basis(idempotent(chi)); }

YElement YAlgebra::block_idempotent(const Composition& mu) const {
  if (mu.length() != r() || mu.size() != n()) throw std::invalid_argument("block_idempotent: bad composition");
  YElement out;
  for (const auto& chi : characters_of(mu)) out += idempotent(chi);
  return out;
}

TElement YAlgebra::to_t_basis(const YElement& a) const {
  validate(a);
  Rational scale = 1;
  for (int i = 0; i < n(); ++i) scale /= r();
  TElement out;
  for (const auto& [m, c] : a.terms()) {
    std::vector<int> k(n(), 0);
    while (true) {
      long phase = 0;
      for (int i = 0; i < n(); ++i) phase -= static_cast<long>(m.chi.values[i] - 1) * k[i];
      out.add(TMonomial{k, m.x, m.w}, c * CycScalar::zeta_power(r(), phase) * scale);
      int j = n() - 1;
      while (j >= 0 && k[j] == r() - 1) k[j--] = 0;
      if (j < 0) break;
      ++k[j];
    }
  }
  return out;
}

YElement YAlgebra::from_t_basis(const TElement& a) const {
  YElement out;
  for (const auto& [m, c] : a.terms()) {
    if (static_cast<int>(m.t.size()) != n() || static_cast<int>(m.x.size()) != n() || m.w.size() != n()) {
      throw std::invalid_argument("from_t_basis: monomial does not match parameters");
    }
    for (const auto& chi : characters_) {
      long phase = 0;
      for (int i = 0; i < n(); ++i) phase += static_cast<long>(chi.values[i] - 1) * m.t[i];
      out.add(YMonomial{chi, m.x, m.w}, c * CycScalar::zeta_power(r(), phase));
    }
  }
  return normal_form(out);
}

CycScalar YAlgebra::form_tau_hat(const YElement& a) const {
  check_cyclotomic("form_tau_hat");
  const TMonomial target{std::vector<int>(n(), 0), std::vector<int>(n(), d() - 1), Permutation::identity(n())};
  CycScalar value(r());
  for (const YElement reduced = normal_form(a); const auto& [m, c] : reduced.terms()) {
    if (m.x != target.x || !m.w.is_identity()) continue;
    value += to_t_basis(YElement(m, c)).coefficient(target, r());
  }
  return value;
}

CycScalar YAlgebra::form_rho_hat_n(const YElement& a) const {
  Rational rn = 1;
  for (int i = 0; i < n(); ++i) rn *= r();
  return form_tau_hat(a) * rn;
}

std::vector<YMonomial> YAlgebra::enumerate_basis(std::optional<int> degree_bound) const {
  std::vector<std::vector<int>> exps;
  if (is_cyclotomic()) {
    exps = exponent_vectors(n(), d() - 1, std::nullopt);
  } else {
    if (!degree_bound || *degree_bound < 0) {
      throw std::invalid_argument("enumerate_basis: the affine variant needs a degree bound");
    }
    exps = exponent_vectors(n(), *degree_bound, degree_bound);
  }
  const auto perms = all_permutations(n());
  std::vector<YMonomial> out;
  out.reserve(characters_.size() * exps.size() * perms.size());
  for (const auto& chi : characters_) {
    for (const auto& x : exps) {
      for (const auto& w : perms) out.push_back(YMonomial{chi, x, w});
    }
  }
  return out;
}

std::size_t YAlgebra::dimension() const {
  check_cyclotomic("dimension");
  std::size_t dim = factorial(n());
  for (int i = 0; i < n(); ++i) dim *= static_cast<std::size_t>(r() * d());
  return dim;
}

}  // namespace yh
