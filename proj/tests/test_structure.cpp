#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braid_oracle.hpp"
#include "spinhecke/structure.hpp"

using namespace spinhecke;

TEST_CASE("composition") {
  auto s1 = Permutation::simple(3, 1), s2 = Permutation::simple(3, 2);
  CHECK((s1 * s1).is_identity());
  CHECK(s1 * s2 * s1 == s2 * s1 * s2);
  CHECK((s1 * s2 * s1).one_line() == std::vector<int>{3, 2, 1});
  CHECK(Permutation::transposition(3, 1, 3).one_line() == std::vector<int>{3, 2, 1});
  CHECK_THROWS_AS(perm_compose(s1, Permutation::simple(4, 1)), RankError);
}

TEST_CASE("lengths and canonical words") {
  for (int n = 1; n <= 5; ++n) {
    const auto& g = SymmetricGroup::get(n);
    CHECK(g.element(0).is_identity());
    for (int a = 0; a < g.order(); ++a) {
      const auto& p = g.element(a);
      REQUIRE(perm_compose(p, p.inverse()).is_identity());
      const auto& w = g.word(a);
      REQUIRE(static_cast<int>(w.size()) == p.length());
      REQUIRE(oracle::word_perm(w, n) == p);
      for (int i = 1; i < n; ++i) {
        int d = (p * Permutation::simple(n, i)).length() - p.length();
        REQUIRE((d == 1 || d == -1));
      }
      if (!p.is_identity()) {
        int i = g.first_left_descent(a);
        REQUIRE((Permutation::simple(n, i) * p).length() == p.length() - 1);
      }
    }
  }
}

TEST_CASE("clifford words") {
  auto m = clifford_mul(0b1, 0b1);
  CHECK(m.sign == 1);
  CHECK(m.value == 0);
  m = clifford_mul(0b10, 0b1);
  CHECK(m.sign == -1);
  CHECK(m.value == 0b11);
  m = clifford_mul(0b011, 0b110);
  CHECK(m.sign == 1);
  CHECK(m.value == 0b101);
  auto c = perm_conjugate_clifford(Permutation::simple(2, 1), 0b1);
  CHECK(c.value == 0b10);
  CHECK(c.sign == 1);
  c = perm_conjugate_clifford(Permutation::identity(3), 0b101);
  CHECK(c.value == 0b101);
  c = perm_conjugate_clifford(Permutation::simple(2, 1), 0b11);
  CHECK(c.sign == -1);
  CHECK(c.value == 0b11);
  CHECK(clifford_parity(0b111) == 1);
  CHECK(clifford_to_string(0b101) == "c1*c3");
}

TEST_CASE("koszul signs") {
  CHECK(koszul_sign(0, 1) == 1);
  CHECK(koszul_sign(1, 1) == -1);
  CHECK(koszul_sign(0, 0) == 1);
}

TEST_CASE("cocycle basics") {
  auto id = Permutation::identity(4);
  auto s1 = Permutation::simple(4, 1), s3 = Permutation::simple(4, 3);
  CHECK(spin_cocycle(id, s1) == 1);
  CHECK(spin_cocycle(s1, s1) == 1);
  CHECK(spin_cocycle(s1, s3) == -spin_cocycle(s3, s1));
}

TEST_CASE("cocycle matches word rewriting for all pairs up to rank 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto& g = SymmetricGroup::get(n);
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        REQUIRE(g.spin_cocycle(a, b) == oracle::cocycle(g.element(a), g.element(b)));
  }
}

TEST_CASE("cocycle identity on random triples at rank 5") {
  const auto& g = SymmetricGroup::get(5);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    int s = pick(rng), t = pick(rng), r = pick(rng);
    REQUIRE(g.spin_cocycle(s, t) * g.spin_cocycle(g.compose(s, t), r) ==
            g.spin_cocycle(s, g.compose(t, r)) * g.spin_cocycle(t, r));
  }
}

TEST_CASE("odd transpositions") {
  auto t12 = odd_transposition(1, 2, 3);
  CHECK(t12.sign == 1);
  CHECK(t12.value == Permutation::simple(3, 1));
  auto t13 = odd_transposition(1, 3, 3);
  CHECK(t13.sign == -1);
  CHECK(t13.value == Permutation::transposition(3, 1, 3));
  CHECK(SymmetricGroup::get(3).word(SymmetricGroup::get(3).id_of(t13.value)) ==
        std::vector<int>{2, 1, 2});
  auto t21 = odd_transposition(2, 1, 3);
  CHECK(t21.sign == -1);
  CHECK_THROWS_AS(odd_transposition(2, 2, 3), RankError);

  // [i,j]^2 = 1 and t_i [i,j] t_i = -[i+1,j].
  for (int n = 2; n <= 5; ++n) {
    const auto& g = SymmetricGroup::get(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        auto x = odd_transposition(i, j, n);
        int id = g.id_of(x.value);
        CHECK(g.spin_cocycle(id, id) == 1);
        if (i < n && j != i + 1) {
          int t = g.simple_id(i);
          int sign = x.sign * g.spin_cocycle(t, id) * g.spin_cocycle(g.compose(t, id), t);
          auto y = odd_transposition(i + 1, j, n);
          CHECK(g.compose(g.compose(t, id), t) == g.id_of(y.value));
          CHECK(sign == -y.sign);
        }
      }
  }
}
