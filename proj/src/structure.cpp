#include "spinhecke/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>

namespace spinhecke {

// ----------------------------------------------------------- Permutation

Permutation::Permutation(const std::vector<int>& one_line) {
  n_ = static_cast<int>(one_line.size());
  if (n_ < 1 || n_ > kMaxRank) throw RankError("permutation size out of range");
  std::array<bool, kMaxRank> seen{};
  for (int i = 0; i < n_; ++i) {
    int v = one_line[i] - 1;
    if (v < 0 || v >= n_ || seen[v]) throw RankError("not a permutation");
    seen[v] = true;
    img_[i] = static_cast<std::int8_t>(v);
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1 || n > kMaxRank) throw RankError("rank out of range");
  Permutation p;
  p.n_ = n;
  for (int i = 0; i < n; ++i) p.img_[i] = static_cast<std::int8_t>(i);
  return p;
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw RankError("simple reflection index out of range");
  return transposition(n, i, i + 1);
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw RankError("transposition indices out of range");
  Permutation p = identity(n);
  std::swap(p.img_[i - 1], p.img_[j - 1]);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.n_ = n_;
  for (int i = 0; i < n_; ++i) p.img_[img_[i]] = static_cast<std::int8_t>(i);
  return p;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

bool Permutation::has_left_descent(int i) const {
  Permutation inv = inverse();
  return inv.img_[i - 1] > inv.img_[i];
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (img_[i] != i) return false;
  return true;
}

int Permutation::simple_index() const {
  for (int i = 0; i + 1 < n_; ++i) {
    if (img_[i] == i + 1 && img_[i + 1] == i) {
      for (int k = 0; k < n_; ++k)
        if (k != i && k != i + 1 && img_[k] != k) return 0;
      return i + 1;
    }
  }
  return 0;
}

std::vector<int> Permutation::lehmer_word() const {
  std::vector<int> word;
  for (int i = 0; i < n_; ++i) {
    int code = 0;
    for (int j = i + 1; j < n_; ++j)
      if (img_[j] < img_[i]) ++code;
    for (int k = i + code; k > i; --k) word.push_back(k);
  }
  return word;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> v(n_);
  for (int i = 0; i < n_; ++i) v[i] = img_[i] + 1;
  return v;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  Permutation r;
  r.n_ = p.n_;
  for (int i = 0; i < p.n_; ++i) r.img_[i] = p.img_[q.img_[i]];
  return r;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += std::to_string(img_[i] + 1);
  }
  return s + "]";
}

Permutation perm_compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw RankError("composing permutations of different size");
  return p * q;
}

// -------------------------------------------------------------- Clifford

int clifford_sign_before(CliffordWord w, int i) {
  unsigned below = static_cast<unsigned>(w) & ((1u << i) - 1u);
  return (std::popcount(below) & 1) ? -1 : 1;
}

Signed<CliffordWord> clifford_mul(CliffordWord a, CliffordWord b) {
  // Move each c_j of b leftwards past the generators of a with larger index.
  int sign = 1;
  unsigned acc = a;
  for (int j = 0; j < 8; ++j) {
    if (!(b >> j & 1u)) continue;
    if (std::popcount(acc >> (j + 1)) & 1) sign = -sign;
    acc ^= 1u << j;
  }
  return {sign, static_cast<CliffordWord>(acc)};
}

Signed<CliffordWord> perm_conjugate_clifford(const Permutation& p, CliffordWord w) {
  // Product c_{p(i_1)} ... c_{p(i_k)}, then sort; sign of the sort.
  int sign = 1;
  unsigned acc = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (!(w >> i & 1u)) continue;
    int j = p(i);
    if (std::popcount(acc >> (j + 1)) & 1) sign = -sign;
    acc |= 1u << j;
  }
  return {sign, static_cast<CliffordWord>(acc)};
}

int clifford_parity(CliffordWord w) { return std::popcount(static_cast<unsigned>(w)) & 1; }

std::string clifford_to_string(CliffordWord w) {
  std::string s;
  for (int i = 0; i < 8; ++i) {
    if (!(w >> i & 1u)) continue;
    if (!s.empty()) s += "*";
    s += "c" + std::to_string(i + 1);
  }
  return s.empty() ? "1" : s;
}

// -------------------------------------------------------- SymmetricGroup

namespace {

int encode(const Permutation& p) {
  int code = 0;
  for (int i = 0; i < p.size(); ++i) code = code * p.size() + p(i);
  return code;
}

}  // namespace

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  do {
    elements_.emplace_back(line);
  } while (std::next_permutation(line.begin(), line.end()));
  const int order = static_cast<int>(elements_.size());
  int space = 1;
  for (int i = 0; i < n; ++i) space *= n;
  lookup_.assign(space, -1);
  for (int a = 0; a < order; ++a) lookup_[encode(elements_[a])] = a;

  compose_.resize(static_cast<size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      compose_[a * order + b] = static_cast<std::uint16_t>(id_of(elements_[a] * elements_[b]));

  inverse_.resize(order);
  length_.resize(order);
  simple_index_.resize(order);
  descent_.resize(order);
  words_.resize(order);
  for (int a = 0; a < order; ++a) {
    const Permutation& p = elements_[a];
    inverse_[a] = static_cast<std::uint16_t>(id_of(p.inverse()));
    length_[a] = static_cast<std::uint8_t>(p.length());
    simple_index_[a] = static_cast<std::uint8_t>(p.simple_index());
    words_[a] = p.lehmer_word();
    descent_[a] = 0;
    for (int i = 1; i < n; ++i) {
      if (p.has_left_descent(i)) {
        descent_[a] = static_cast<std::uint8_t>(i);
        break;
      }
    }
  }
  for (int i = 1; i < n; ++i) simple_id_.push_back(id_of(Permutation::simple(n, i)));
  cocycle_.assign(static_cast<size_t>(order) * order, 0);
  clifford_images_.resize(order);
}

const SymmetricGroup& SymmetricGroup::get(int n) {
  if (n < 1 || n > kMaxRank) throw RankError("rank out of range: " + std::to_string(n));
  static std::mutex mu;
  static std::array<std::unique_ptr<SymmetricGroup>, kMaxRank + 1> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[n]) cache[n].reset(new SymmetricGroup(n));
  return *cache[n];
}

int SymmetricGroup::id_of(const Permutation& p) const {
  if (p.size() != n_) throw RankError("permutation of wrong size");
  return lookup_[encode(p)];
}

int SymmetricGroup::transposition_id(int i, int j) const {
  return id_of(Permutation::transposition(n_, i, j));
}

// The image of t_sigma under t_i -> w^{-1} (c_{i+1} - c_i) s_i is
// w^{-l(sigma)} Y_sigma sigma with Y_sigma an integral Clifford element.
const std::vector<std::int32_t>& SymmetricGroup::clifford_image(int a) const {
  auto& y = clifford_images_[a];
  if (!y.empty()) return y;
  std::vector<std::int32_t> acc(1u << n_, 0);
  acc[0] = 1;
  Permutation pi = Permutation::identity(n_);
  for (int j : words_[a]) {
    std::vector<std::int32_t> next(acc.size(), 0);
    const CliffordWord hi = static_cast<CliffordWord>(1u << pi(j));
    const CliffordWord lo = static_cast<CliffordWord>(1u << pi(j - 1));
    for (size_t w = 0; w < acc.size(); ++w) {
      if (acc[w] == 0) continue;
      auto p = clifford_mul(static_cast<CliffordWord>(w), hi);
      next[p.value] += p.sign * acc[w];
      auto q = clifford_mul(static_cast<CliffordWord>(w), lo);
      next[q.value] -= q.sign * acc[w];
    }
    acc = std::move(next);
    pi = pi * Permutation::simple(n_, j);
  }
  y = std::move(acc);
  return y;
}

int SymmetricGroup::spin_cocycle(int a, int b) const {
  std::int8_t& slot = cocycle_[static_cast<size_t>(a) * order() + b];
  if (slot != 0) return slot;
  const auto& ya = clifford_image(a);
  const auto& yb = clifford_image(b);
  const int ab = compose(a, b);
  const auto& yab = clifford_image(ab);
  // Y_a * a(Y_b) = beta * (-2)^k * Y_ab with 2k = l(a) + l(b) - l(ab).
  std::vector<std::int64_t> prod(ya.size(), 0);
  const Permutation& pa = elements_[a];
  for (size_t wb = 0; wb < yb.size(); ++wb) {
    if (yb[wb] == 0) continue;
    auto conj = perm_conjugate_clifford(pa, static_cast<CliffordWord>(wb));
    for (size_t wa = 0; wa < ya.size(); ++wa) {
      if (ya[wa] == 0) continue;
      auto m = clifford_mul(static_cast<CliffordWord>(wa), conj.value);
      prod[m.value] += static_cast<std::int64_t>(m.sign) * conj.sign * ya[wa] * yb[wb];
    }
  }
  const int k = (length(a) + length(b) - length(ab)) / 2;
  std::int64_t scale = 1;
  for (int i = 0; i < k; ++i) scale *= -2;
  int beta = 0;
  for (size_t w = 0; w < yab.size(); ++w) {
    if (yab[w] == 0) continue;
    std::int64_t expect = scale * yab[w];
    beta = prod[w] == expect ? 1 : -1;
    break;
  }
  slot = static_cast<std::int8_t>(beta);
  return beta;
}

int spin_cocycle(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw RankError("cocycle of permutations of different size");
  const SymmetricGroup& g = SymmetricGroup::get(s.size());
  return g.spin_cocycle(g.id_of(s), g.id_of(t));
}

Signed<Permutation> odd_transposition(int i, int j, int n) {
  if (i == j) throw RankError("odd transposition needs distinct indices");
  if (i < 1 || j < 1 || i > n || j > n) throw RankError("odd transposition index out of range");
  if (i > j) {
    auto r = odd_transposition(j, i, n);
    r.sign = -r.sign;
    return r;
  }
  const SymmetricGroup& g = SymmetricGroup::get(n);
  std::vector<int> word;
  for (int k = j - 1; k > i; --k) word.push_back(k);
  word.push_back(i);
  for (int k = i + 1; k < j; ++k) word.push_back(k);
  int sign = ((j - i - 1) % 2) ? -1 : 1;
  int acc = 0;
  for (int k : word) {
    int s = g.simple_id(k);
    sign *= g.spin_cocycle(acc, s);
    acc = g.compose(acc, s);
  }
  return {sign, g.element(acc)};
}

}  // namespace spinhecke
