#ifndef YH_LINEAR_COMBINATION_HPP
#define YH_LINEAR_COMBINATION_HPP

#include <map>
#include <utility>

#include "yh/scalar.hpp"

namespace yh {

/// Sparse K-linear combination of monomials.  Zero coefficients are never
/// stored, so equality of combinations is equality of the maps.
template <class Monomial>
class LinearCombination {
 public:
  using Map = std::map<Monomial, CycScalar>;

  LinearCombination() = default;
  LinearCombination(const Monomial& m, const CycScalar& c) { add(m, c); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Monomial& m, const CycScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const LinearCombination& other, const CycScalar& scale) {
    for (const auto& [m, c] : other.terms_) add(m, c * scale);
  }

  // Coefficient of m; `order` supplies the field when m is absent.
  CycScalar coefficient(const Monomial& m, int order) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CycScalar(order) : it->second;
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [m, c] : other.terms_) add(m, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [m, c] : other.terms_) add(m, -c);
    return *this;
  }
  LinearCombination& operator*=(const CycScalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(const CycScalar& s, LinearCombination a) { return a *= s; }
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

}  // namespace yh

#endif  // YH_LINEAR_COMBINATION_HPP
