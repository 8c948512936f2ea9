#pragma once

// Sign cocycle computed by rewriting words in the generators t_i, using
// only t_i^2 = 1, braid moves (sign +1) and far commutations (sign -1).
// Shares nothing with the library's Clifford-model computation.

#include <map>
#include <queue>
#include <stdexcept>
#include <vector>

#include "spinhecke/structure.hpp"

namespace oracle {

using Word = std::vector<int>;

inline spinhecke::Permutation word_perm(const Word& w, int n) {
  auto p = spinhecke::Permutation::identity(n);
  for (int i : w) p = p * spinhecke::Permutation::simple(n, i);
  return p;
}

// All words reachable from `start` by braid/commutation moves, with the
// sign relating each one to `start`.
inline std::map<Word, int> reduced_class(const Word& start) {
  std::map<Word, int> seen{{start, 1}};
  std::queue<Word> todo;
  todo.push(start);
  while (!todo.empty()) {
    Word w = todo.front();
    todo.pop();
    const int s = seen[w];
    auto visit = [&](Word v, int sign) {
      if (seen.emplace(v, s * sign).second) todo.push(std::move(v));
    };
    for (size_t k = 0; k + 1 < w.size(); ++k) {
      int a = w[k], b = w[k + 1];
      if (std::abs(a - b) > 1) {
        Word v = w;
        std::swap(v[k], v[k + 1]);
        visit(v, -1);
      }
      if (k + 2 < w.size() && std::abs(a - b) == 1 && w[k + 2] == a) {
        Word v = w;
        v[k] = b;
        v[k + 1] = a;
        v[k + 2] = b;
        visit(v, 1);
      }
    }
  }
  return seen;
}

// t_word = sign * t_{target} where target is a reduced word of the same
// permutation.
inline int express(const Word& word, const Word& target, int n) {
  Word acc;
  int sign = 1;
  for (int j : word) {
    Word extended = acc;
    extended.push_back(j);
    if (word_perm(extended, n).length() > static_cast<int>(acc.size())) {
      acc = std::move(extended);
      continue;
    }
    // acc has a right descent at j: find a reduced word ending in j.
    auto cls = reduced_class(acc);
    bool found = false;
    for (const auto& [w, s] : cls) {
      if (!w.empty() && w.back() == j) {
        sign *= s;
        acc.assign(w.begin(), w.end() - 1);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no reduced word ending in the descent");
  }
  auto cls = reduced_class(acc);
  auto it = cls.find(target);
  if (it == cls.end()) throw std::logic_error("target not in reduced-word class");
  return sign * it->second;
}

inline int cocycle(const spinhecke::Permutation& a, const spinhecke::Permutation& b) {
  const int n = a.size();
  Word w = a.lehmer_word();
  Word wb = b.lehmer_word();
  w.insert(w.end(), wb.begin(), wb.end());
  return express(w, (a * b).lehmer_word(), n);
}

}  // namespace oracle
