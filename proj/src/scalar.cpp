#include "yh/scalar.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace yh {
namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; the divisor is monic.
std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t m = den.size() - 1;
  std::vector<Integer> quot(num.size() - m, 0);
  for (std::size_t k = num.size(); k-- > m;) {
    const Integer c = num[k];
    quot[k - m] = c;
    for (std::size_t j = 0; j <= m; ++j) num[k - m + j] -= c * den[j];
  }
  for (const auto& c : num) {
    if (c != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quot;
}

const Poly& modulus(int r) {
  thread_local std::map<int, Poly> cache;
  auto it = cache.find(r);
  if (it == cache.end()) {
    Poly p;
    for (const auto& c : cyclotomic_polynomial(r)) p.emplace_back(c);
    it = cache.emplace(r, std::move(p)).first;
  }
  return it->second;
}

void reduce_mod(Poly& p, const Poly& mod) {
  const std::size_t m = mod.size() - 1;
  for (std::size_t k = p.size(); k-- > m;) {
    if (p[k] == 0) continue;
    const Rational c = p[k];
    for (std::size_t j = 0; j <= m; ++j) p[k - m + j] -= c * mod[j];
  }
  p.resize(m);
}

// Polynomial long division over Q: returns quotient, leaves remainder in num.
Poly divmod(Poly& num, const Poly& den) {
  Poly quot;
  if (num.size() < den.size()) return quot;
  quot.assign(num.size() - den.size() + 1, 0);
  const Rational lead = den.back();
  for (std::size_t k = num.size() - 1;; --k) {
    const Rational c = num[k] / lead;
    quot[k - den.size() + 1] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < den.size(); ++j) num[k - den.size() + 1 + j] -= c * den[j];
    }
    if (k == den.size() - 1) break;
  }
  trim(num);
  return quot;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  const auto slash = s.find('/');
  auto digits_ok = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const std::size_t num_end = slash == std::string::npos ? s.size() : slash;
  if (!digits_ok(start, num_end) || (slash != std::string::npos && !digits_ok(slash + 1, s.size()))) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(Integer(s));
  } else {
    const std::size_t cut = s.find('/');
    Integer num(s.substr(0, cut));
    Integer den(s.substr(cut + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q = Rational(num, den);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

std::vector<Integer> cyclotomic_polynomial(int r) {
  if (r < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  thread_local std::map<int, std::vector<Integer>> cache;
  if (auto it = cache.find(r); it != cache.end()) return it->second;
  std::vector<Integer> num(r + 1, 0);
  num[0] = -1;
  num[r] = 1;
  for (int s = 1; s < r; ++s) {
    if (r % s == 0) num = divide_exact(num, cyclotomic_polynomial(s));
  }
  cache.emplace(r, num);
  return num;
}

int euler_phi(int r) {
  if (r < 1) throw std::invalid_argument("euler_phi: order must be positive");
  int result = r;
  int m = r;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

CycScalar::CycScalar(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("CycScalar: order must be positive");
  coeffs_.assign(euler_phi(order), 0);
}

CycScalar::CycScalar(int order, const Rational& value) : CycScalar(order) { coeffs_[0] = value; }

CycScalar::CycScalar(int order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 1) throw std::invalid_argument("CycScalar: order must be positive");
  const std::size_t phi = euler_phi(order);
  if (coeffs_.size() > phi) {
    reduce_mod(coeffs_, modulus(order));
  } else {
    coeffs_.resize(phi, 0);
  }
}

CycScalar CycScalar::zeta(int order, int index) {
  if (index < 1 || index > order) {
    throw std::out_of_range("zeta: index " + std::to_string(index) + " outside 1.." + std::to_string(order));
  }
  return zeta_power(order, index - 1);
}

CycScalar CycScalar::zeta_power(int order, long k) {
  if (order < 1) throw std::invalid_argument("zeta_power: order must be positive");
  long e = k % order;
  if (e < 0) e += order;
  std::vector<Rational> c(e + 1, 0);
  c[e] = 1;
  return CycScalar(order, std::move(c));
}

bool CycScalar::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycScalar::is_one() const { return is_rational() && coeffs_[0] == 1; }

bool CycScalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Rational CycScalar::rational_value() const {
  if (!is_rational()) throw std::domain_error("CycScalar is not rational");
  return coeffs_[0];
}

void CycScalar::check_order(const CycScalar& other) const {
  if (order_ != other.order_) {
    throw std::invalid_argument("CycScalar order mismatch: " + std::to_string(order_) + " vs " +
                                std::to_string(other.order_));
  }
}

CycScalar& CycScalar::operator+=(const CycScalar& other) {
  check_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& other) {
  check_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& other) {
  check_order(other);
  if (coeffs_.size() == 1) {
    coeffs_[0] *= other.coeffs_[0];
    return *this;
  }
  if (other.is_rational()) return *this *= other.coeffs_[0];
  Poly product = poly_mul(coeffs_, other.coeffs_);
  reduce_mod(product, modulus(order_));
  coeffs_ = std::move(product);
  return *this;
}

CycScalar& CycScalar::operator*=(const Rational& factor) {
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

CycScalar& CycScalar::operator/=(const CycScalar& other) {
  check_order(other);
  return *this *= other.inverse();
}

CycScalar CycScalar::operator-() const {
  CycScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw std::domain_error("CycScalar: division by zero");
  if (is_rational()) return CycScalar(order_, Rational(1) / coeffs_[0]);
  // Extended Euclid against the cyclotomic modulus; the gcd is a nonzero
  // constant because the modulus is irreducible.
  Poly old_r = coeffs_;
  trim(old_r);
  Poly cur_r = modulus(order_);
  Poly old_s{Rational(1)};
  Poly cur_s;
  while (!cur_r.empty()) {
    Poly rem = old_r;
    Poly q = divmod(rem, cur_r);
    Poly next_s = poly_sub(old_s, poly_mul(q, cur_s));
    old_r = std::move(cur_r);
    cur_r = std::move(rem);
    old_s = std::move(cur_s);
    cur_s = std::move(next_s);
  }
  if (old_r.size() != 1) throw std::logic_error("CycScalar::inverse: modulus not coprime");
  const Rational scale = Rational(1) / old_r[0];
  for (auto& c : old_s) c *= scale;
  return CycScalar(order_, std::move(old_s));
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

std::string CycScalar::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycScalar& value) { return os << value.to_string(); }

}  // namespace yh
