#pragma once

// Finite structure constants: permutations of S_n, canonical Clifford words,
// the sign cocycle of the spin symmetric group algebra, and Koszul signs.

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spinhecke {

inline constexpr int kMaxRank = 6;

class RankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bijection of {0..n-1} in one-line notation. Public constructors take
/// 1-based images to match the usual mathematical notation.
class Permutation {
 public:
  Permutation() = default;
  /// From 1-based one-line notation, e.g. {3, 2, 1}.
  explicit Permutation(const std::vector<int>& one_line);

  static Permutation identity(int n);
  /// s_i = (i, i+1), 1-based.
  static Permutation simple(int n, int i);
  /// s_{ij} = (i, j), 1-based.
  static Permutation transposition(int n, int i, int j);

  int size() const { return n_; }
  /// Image of a 0-based point.
  int operator()(int i) const { return img_[i]; }
  /// Image of a 1-based point, 1-based.
  int image1(int i) const { return img_[i - 1] + 1; }

  Permutation inverse() const;
  /// Inversion count.
  int length() const;
  /// True when length(s_i p) < length(p), 1-based i.
  bool has_left_descent(int i) const;
  bool is_identity() const;
  /// Simple index (1-based) when this is a simple reflection, else 0.
  int simple_index() const;

  /// Canonical reduced word (1-based simple indices) read off the Lehmer
  /// code: for each position i, the descending run s_{i+L_i-1} ... s_i.
  std::vector<int> lehmer_word() const;
  std::vector<int> one_line() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && a.img_ == b.img_;
  }

  std::string to_string() const;

 private:
  std::array<std::int8_t, kMaxRank> img_{};
  int n_ = 0;
};

/// Checked composition (p o q)(i) = p(q(i)); throws RankError on size mismatch.
Permutation perm_compose(const Permutation& p, const Permutation& q);

template <typename T>
struct Signed {
  int sign = 1;
  T value;
};

/// c_1^{b_1} ... c_n^{b_n} in increasing index order, bit i-1 for c_i.
using CliffordWord = std::uint8_t;

/// (-1)^{number of set bits of w strictly below bit i}; bit i is 0-based.
int clifford_sign_before(CliffordWord w, int i);
/// Product of canonical words: sign * word.
Signed<CliffordWord> clifford_mul(CliffordWord a, CliffordWord b);
/// sigma c_{i_1}...c_{i_k} sigma^{-1} = sign * canonical word.
Signed<CliffordWord> perm_conjugate_clifford(const Permutation& p, CliffordWord w);
int clifford_parity(CliffordWord w);
std::string clifford_to_string(CliffordWord w);

/// (-1)^{pq}.
inline int koszul_sign(int p, int q) { return (p & q & 1) ? -1 : 1; }

/// Multiplication and cocycle tables for one rank. Elements are indexed by
/// lexicographic rank of their one-line notation; rank 0 is the identity.
class SymmetricGroup {
 public:
  /// Shared instance for rank n (1 <= n <= kMaxRank).
  static const SymmetricGroup& get(int n);

  int rank() const { return n_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const Permutation& element(int id) const { return elements_[id]; }
  int id_of(const Permutation& p) const;

  int compose(int a, int b) const { return compose_[a * order() + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int length(int a) const { return length_[a]; }
  /// 1-based simple index or 0.
  int simple_index(int a) const { return simple_index_[a]; }
  int simple_id(int i) const { return simple_id_[i - 1]; }
  int transposition_id(int i, int j) const;
  int image(int a, int point0) const { return elements_[a](point0); }
  const std::vector<int>& word(int a) const { return words_[a]; }
  /// Smallest 1-based i with a left descent.
  int first_left_descent(int a) const { return descent_[a]; }

  /// beta(s, t) with t_s t_t = beta(s, t) t_{st} in the spin group algebra,
  /// where t_sigma is the product of t_i along the Lehmer word.
  int spin_cocycle(int a, int b) const;

 private:
  explicit SymmetricGroup(int n);
  const std::vector<std::int32_t>& clifford_image(int a) const;

  int n_;
  std::vector<Permutation> elements_;
  std::vector<std::uint16_t> compose_;
  std::vector<std::uint16_t> inverse_;
  std::vector<std::uint8_t> length_;
  std::vector<std::uint8_t> simple_index_;
  std::vector<int> simple_id_;
  std::vector<std::uint8_t> descent_;
  std::vector<std::vector<int>> words_;
  std::vector<int> lookup_;
  mutable std::vector<std::int8_t> cocycle_;
  mutable std::vector<std::vector<std::int32_t>> clifford_images_;
};

/// beta(s, t) for arbitrary permutations of equal size.
int spin_cocycle(const Permutation& s, const Permutation& t);

/// The odd transposition [i, j] (1-based, i != j) as sign * t_{s_ij}.
Signed<Permutation> odd_transposition(int i, int j, int n);

}  // namespace spinhecke
