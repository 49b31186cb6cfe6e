#include "yh/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace yh {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::simple(int n, int i) {
  if (i < 0 || i + 1 >= n) throw std::out_of_range("simple transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.images_[i], p.images_[i + 1]);
  return p;
}

Permutation Permutation::from_one_line(const std::vector<int>& one_based) {
  std::vector<int> im;
  im.reserve(one_based.size());
  for (int v : one_based) im.push_back(v - 1);
  return Permutation(std::move(im));
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out;
  out.reserve(images_.size());
  for (int v : images_) out.push_back(v + 1);
  return out;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (int i = 0; i < size(); ++i) p.images_[images_[i]] = i;
  return p;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (images_[i] > images_[j]) ++inv;
    }
  }
  return inv;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::optional<int> Permutation::left_descent() const {
  // Position of value i is w^{-1}(i).
  std::vector<int> pos(images_.size());
  for (int j = 0; j < size(); ++j) pos[images_[j]] = j;
  for (int i = 0; i + 1 < size(); ++i) {
    if (pos[i] > pos[i + 1]) return i;
  }
  return std::nullopt;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  Permutation w = *this;
  while (auto i = w.left_descent()) {
    word.push_back(*i);
    w = simple(size(), *i) * w;
  }
  return word;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Permutation size mismatch");
  Permutation p;
  p.images_.resize(a.images_.size());
  for (int i = 0; i < a.size(); ++i) p.images_[i] = a.images_[b.images_[i]];
  return p;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

int Composition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Composition::block_start(int a) const { return std::accumulate(parts.begin(), parts.begin() + a, 0); }

int Composition::block_of(int j) const {
  int acc = 0;
  for (int a = 0; a < length(); ++a) {
    acc += parts[a];
    if (j < acc) return a;
  }
  throw std::out_of_range("strand outside composition");
}

int MultiPartition::size() const {
  int total = 0;
  for (const auto& p : components) total += std::accumulate(p.begin(), p.end(), 0);
  return total;
}

Character act(const Permutation& w, const Character& chi) {
  if (w.size() != chi.size()) throw std::invalid_argument("act: size mismatch");
  Character out{std::vector<int>(chi.values.size())};
  for (int j = 0; j < w.size(); ++j) out.values[w(j)] = chi.values[j];
  return out;
}

std::vector<int> permute_exponents(const Permutation& w, const std::vector<int>& alpha) {
  if (w.size() != static_cast<int>(alpha.size())) throw std::invalid_argument("permute_exponents: size mismatch");
  std::vector<int> out(alpha.size());
  for (int j = 0; j < w.size(); ++j) out[w(j)] = alpha[j];
  return out;
}

Composition comp_of(const Character& chi, int r) {
  Composition mu{std::vector<int>(r, 0)};
  for (int a : chi.values) {
    if (a < 1 || a > r) throw std::out_of_range("character value outside 1..r");
    ++mu.parts[a - 1];
  }
  return mu;
}

Character chi0(const Composition& mu) {
  Character chi;
  for (int a = 0; a < mu.length(); ++a) {
    if (mu.parts[a] < 0) throw std::invalid_argument("negative composition part");
    chi.values.insert(chi.values.end(), mu.parts[a], a + 1);
  }
  return chi;
}

Permutation pi_chi(const Character& chi, int r) {
  const Composition mu = comp_of(chi, r);
  // The k-th strand of block a goes to the k-th position carrying value a.
  std::vector<int> next(r);
  for (int a = 0; a < r; ++a) next[a] = mu.block_start(a);
  std::vector<int> images(chi.values.size());
  for (int i = 0; i < chi.size(); ++i) images[next[chi.values[i] - 1]++] = i;
  return Permutation(std::move(images));
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::int64_t m_mu(const Composition& mu) {
  std::int64_t m = factorial(mu.size());
  for (int p : mu.parts) m /= factorial(p);
  return m;
}

bool in_young_subgroup(const Permutation& w, const Composition& mu) {
  if (w.size() != mu.size()) return false;
  for (int j = 0; j < w.size(); ++j) {
    if (mu.block_of(j) != mu.block_of(w(j))) return false;
  }
  return true;
}

std::vector<Permutation> young_subgroup(const Composition& mu) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(mu.size())) {
    if (in_young_subgroup(w, mu)) out.push_back(std::move(w));
  }
  return out;
}

std::vector<Character> characters_of(const Composition& mu) {
  Character c = chi0(mu);
  std::vector<Character> out;
  do {
    out.push_back(c);
  } while (std::next_permutation(c.values.begin(), c.values.end()));
  return out;
}

std::vector<Permutation> cosets(const Composition& mu) {
  std::vector<Permutation> out;
  for (const auto& chi : characters_of(mu)) out.push_back(pi_chi(chi, mu.length()));
  return out;
}

std::vector<Character> all_characters(int r, int n) {
  std::vector<Character> out;
  Character c{std::vector<int>(n, 1)};
  while (true) {
    out.push_back(c);
    int j = n - 1;
    while (j >= 0 && c.values[j] == r) c.values[j--] = 1;
    if (j < 0) break;
    ++c.values[j];
  }
  return out;
}

namespace {

void compositions_rec(int r, int remaining, std::vector<int>& cur, std::vector<Composition>& out) {
  if (static_cast<int>(cur.size()) == r - 1) {
    cur.push_back(remaining);
    out.push_back(Composition{cur});
    cur.pop_back();
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur.push_back(k);
    compositions_rec(r, remaining - k, cur, out);
    cur.pop_back();
  }
}

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int r, int n) {
  if (r < 1 || n < 0) throw std::invalid_argument("enumerate_compositions: need r >= 1, n >= 0");
  std::vector<Composition> out;
  std::vector<int> cur;
  compositions_rec(r, n, cur, out);
  return out;
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<MultiPartition> enumerate_multipartitions(int d, int n) {
  std::vector<MultiPartition> out;
  for (const auto& sizes : enumerate_compositions(d, n)) {
    std::vector<MultiPartition> partial{MultiPartition{}};
    for (int s : sizes.parts) {
      std::vector<MultiPartition> next;
      for (const auto& base : partial) {
        for (const auto& p : enumerate_partitions(s)) {
          MultiPartition m = base;
          m.components.push_back(p);
          next.push_back(std::move(m));
        }
      }
      partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  return out;
}

std::vector<std::vector<MultiPartition>> enumerate_r_tuples_of_d_partitions(int r, int d, int n) {
  std::vector<std::vector<MultiPartition>> out;
  for (const auto& mu : enumerate_compositions(r, n)) {
    std::vector<std::vector<MultiPartition>> partial{{}};
    for (int s : mu.parts) {
      std::vector<std::vector<MultiPartition>> next;
      for (const auto& base : partial) {
        for (const auto& m : enumerate_multipartitions(d, s)) {
          auto t = base;
          t.push_back(m);
          next.push_back(std::move(t));
        }
      }
      partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  return out;
}

namespace {
std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}
}  // namespace

std::string to_string(const Permutation& w) { return join(w.one_line()); }
std::string to_string(const Character& chi) { return join(chi.values); }
std::string to_string(const Composition& mu) { return join(mu.parts); }

}  // namespace yh
