#ifndef YH_COMBINATORICS_HPP
#define YH_COMBINATORICS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace yh {

/// A permutation of {0, ..., n-1} in one-line notation.  Composition follows
/// (w * v)(i) = w(v(i)).  The external (JSON/CLI) form is 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // The simple transposition s_i swapping positions i and i+1 (0-based).
  static Permutation simple(int n, int i);
  static Permutation from_one_line(const std::vector<int>& one_based);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }
  std::vector<int> one_line() const;

  Permutation inverse() const;
  int length() const;
  bool is_identity() const;
  // Some i with l(s_i w) < l(w), i.e. w^{-1}(i) > w^{-1}(i+1).
  std::optional<int> left_descent() const;
  // Indices i_1..i_k (0-based) with w = s_{i_1} * ... * s_{i_k}, k = l(w).
  std::vector<int> reduced_word() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

std::vector<Permutation> all_permutations(int n);

/// An r-composition of n.
struct Composition {
  std::vector<int> parts;

  int size() const;  // n = sum of parts
  int length() const { return static_cast<int>(parts.size()); }
  // Index of the first strand of block a (0-based strands).
  int block_start(int a) const;
  // Block containing strand j.
  int block_of(int j) const;

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;
};

/// A character of the torus: values[j] = a means chi(t_j) = zeta_a, 1 <= a <= r.
struct Character {
  std::vector<int> values;

  int size() const { return static_cast<int>(values.size()); }
  friend auto operator<=>(const Character&, const Character&) = default;
  friend bool operator==(const Character&, const Character&) = default;
};

using Partition = std::vector<int>;

/// Ordered tuple of partitions (a d-partition), or a tuple of those.
struct MultiPartition {
  std::vector<Partition> components;

  int size() const;
  friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;
  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
};

// w(chi)(t_i) = chi(t_{w^{-1}(i)}).
Character act(const Permutation& w, const Character& chi);
// Same rule on exponent vectors: (w.alpha)_i = alpha_{w^{-1}(i)}.
std::vector<int> permute_exponents(const Permutation& w, const std::vector<int>& alpha);

Composition comp_of(const Character& chi, int r);
Character chi0(const Composition& mu);
// Minimal-length permutation with act(pi, chi0(comp_of(chi))) = chi.
Permutation pi_chi(const Character& chi, int r);

std::int64_t factorial(int n);
std::int64_t m_mu(const Composition& mu);
// Stabilizer of chi0(mu), i.e. the Young subgroup, sorted by one-line order.
std::vector<Permutation> young_subgroup(const Composition& mu);
bool in_young_subgroup(const Permutation& w, const Composition& mu);
// Characters with composition mu, in lexicographic order.
std::vector<Character> characters_of(const Composition& mu);
// pi_chi for chi in characters_of(mu), same order.
std::vector<Permutation> cosets(const Composition& mu);
// All r^n characters, lexicographic.
std::vector<Character> all_characters(int r, int n);

// Reverse lexicographic on parts: (n,0,..), ..., (0,..,n).
std::vector<Composition> enumerate_compositions(int r, int n);
// Partitions of n in reverse lexicographic order.
std::vector<Partition> enumerate_partitions(int n);
// d-partitions of n, ordered by the composition of their sizes then by
// component partitions.
std::vector<MultiPartition> enumerate_multipartitions(int d, int n);
// r-tuples of d-partitions with total size n; each outer entry is one
// d-partition.
std::vector<std::vector<MultiPartition>> enumerate_r_tuples_of_d_partitions(int r, int d, int n);

std::string to_string(const Permutation& w);
std::string to_string(const Character& chi);
std::string to_string(const Composition& mu);

}  // namespace yh

#endif  // YH_COMBINATORICS_HPP
