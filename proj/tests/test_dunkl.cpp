#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinhecke/dunkl.hpp"

using namespace spinhecke;

namespace {

std::string first_failure(const Report& r) {
  for (const auto& c : r.results)
    if (!c.pass) return c.id + " -> " + c.witness;
  return {};
}

Exponents exps(std::initializer_list<int> v) {
  Exponents e{};
  int i = 0;
  for (int x : v) e[i++] = static_cast<std::int16_t>(x);
  return e;
}

Poly var(int n, int i) { return Poly::variable(n, i); }

InducedModule y_module(int n) {
  return InducedModule(Algebra::get(Kind::DaHCa, n), FiniteModule::basic_spin(n), PolySide::Y);
}
InducedModule x_module(int n) {
  return InducedModule(Algebra::get(Kind::DaHCa, n), FiniteModule::basic_spin(n), PolySide::X);
}
InducedModule spin_module(int n) {
  return InducedModule(Algebra::get(Kind::SDaHa, n), FiniteModule::regular_spin(n), PolySide::Y);
}

// Random homogeneous polynomial of degree d.
Poly random_homogeneous(int n, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), slot(0, n - 1);
  Poly f(n);
  for (int t = 0; t < 4; ++t) {
    Exponents e{};
    for (int k = 0; k < d; ++k) ++e[slot(rng)];
    f.add_term(e, Scalar(coeff(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("divided differences") {
  Poly y1 = var(2, 1), y2 = var(2, 2);
  CHECK(divided_difference(y1 * y1, 1, 2) == y1 + y2);
  CHECK(divided_difference(y1 * y2, 1, 2).is_zero());
  CHECK(divided_difference(y1 * y1 + y2 * y2, 1, 2).is_zero());
  CHECK(divided_difference(y2, 1, 2) == Poly::monomial(2, {}, Scalar(-1)));
  CHECK_THROWS_AS(divided_difference(y1, 1, 1), std::invalid_argument);

  // Exactness: (v_i - v_k) * dd(f) = f - s f on random inputs.
  std::mt19937_64 rng(3);
  Permutation s = Permutation::transposition(3, 1, 3);
  for (int t = 0; t < 50; ++t) {
    Poly f = random_homogeneous(3, 1 + t % 5, rng);
    CHECK((var(3, 1) - var(3, 3)) * divided_difference(f, 1, 3) == f - f.permuted(s));
    // (v_i + v_k) * sdd(f) = f - tau s f
    Poly tsf = f.permuted(s).negated(1).negated(3);
    CHECK((var(3, 1) + var(3, 3)) * signed_divided_difference(f, 1, 3) == f - tsf);
  }
}

TEST_CASE("finite modules satisfy their relations") {
  for (int n = 2; n <= 3; ++n) {
    for (const char* name : {"basic-spin", "regular-clifford", "regular-spin"}) {
      FiniteModule w = FiniteModule::by_name(name, n);
      Report r = w.verify();
      CHECK_MESSAGE(r.ok(), first_failure(r));
    }
  }
  CHECK(FiniteModule::basic_spin(3).dim() == 8);
  CHECK(FiniteModule::regular_spin(3).dim() == 6);
  CHECK(FiniteModule::regular_clifford(2).dim() == 8);
  CHECK_THROWS_AS(FiniteModule::by_name("trivial", 2), std::invalid_argument);
}

TEST_CASE("Dunkl x on C[y] (x) L_2") {
  InducedModule m = y_module(2);
  InducedVector v = InducedVector::basis(exps({0, 1}), 0);
  CHECK(m.to_string(dunkl_x(m, 1, v)) == "-u*1 ⊗ 1 + u*1 ⊗ c1*c2");
  CHECK(dunkl_x(m, 1, InducedVector::basis(exps({0, 0}), 3)).is_zero());
  Poly sym = var(2, 1) * var(2, 1) + var(2, 2) * var(2, 2) + var(2, 1) * var(2, 2);
  CHECK(dunkl_x(m, 1, InducedVector::tensor(sym, 1)).is_zero());
}

TEST_CASE("Dunkl y on C[x] (x) L_2") {
  InducedModule m = x_module(2);
  CHECK(m.to_string(dunkl_y(m, 1, InducedVector::basis(exps({0, 1}), 0))) == "u*1 ⊗ 1 + u*1 ⊗ c1*c2");
  for (int b = 0; b < 4; ++b) CHECK(dunkl_y(m, 2, InducedVector::basis(exps({0, 0}), b)).is_zero());
}

TEST_CASE("Dunkl xi on C[y] (x) CS_2^-") {
  InducedModule m = spin_module(2);
  CHECK(m.to_string(dunkl_xi(m, 1, InducedVector::basis(exps({0, 1}), 0))) == "u*1 ⊗ t1");
  CHECK(dunkl_xi(m, 2, InducedVector::basis(exps({0, 0}), 1)).is_zero());
  Poly sym = var(2, 1) + var(2, 2);
  CHECK(dunkl_xi(m, 1, InducedVector::tensor(sym, 0)).is_zero());
}

TEST_CASE("Dunkl operators lower the degree by one") {
  std::mt19937_64 rng(11);
  InducedModule m = y_module(3), s = spin_module(3);
  for (int t = 0; t < 40; ++t) {
    int d = 1 + t % 4;
    Poly f = random_homogeneous(3, d, rng);
    for (int i = 1; i <= 3; ++i) {
      InducedVector a = dunkl_x(m, i, InducedVector::tensor(f, t % 8));
      CHECK(a.is_homogeneous());
      CHECK((a.is_zero() || a.degree() == d - 1));
      InducedVector b = dunkl_xi(s, i, InducedVector::tensor(f, t % 6));
      CHECK(b.is_homogeneous());
      CHECK((b.is_zero() || b.degree() == d - 1));
    }
  }
}

TEST_CASE("module structure and oracle agreement") {
  for (int n = 2; n <= 3; ++n) {
    int bound = n == 2 ? 4 : 3;
    for (const InducedModule& m : {y_module(n), x_module(n), spin_module(n)}) {
      Report r = verify_module(m, bound);
      CHECK_MESSAGE(r.ok(), first_failure(r));
    }
  }
  InducedModule reg(Algebra::get(Kind::DaHCa, 2), FiniteModule::regular_clifford(2), PolySide::Y);
  Report r = verify_module(reg, 3);
  CHECK_MESSAGE(r.ok(), first_failure(r));
}

TEST_CASE("element action matches letter-by-letter action") {
  InducedModule m = y_module(2);
  const Algebra& a = m.algebra();
  Element e = left_gen(a, 1) * right_gen(a, 2) + simple_gen(a, 1) * cliff_gen(a, 2);
  InducedVector v = InducedVector::basis(exps({1, 2}), 1);
  InducedVector by_parts = m.act(left_gen(a, 1), m.act(right_gen(a, 2), v)) +
                           m.act(simple_gen(a, 1), m.act(cliff_gen(a, 2), v));
  CHECK(m.act(e, v) == by_parts);
}

TEST_CASE("transport through C_n (x) SDaHa") {
  Report r = transport_check(2, 3);
  CHECK(r.results.size() > 0);
  CHECK_MESSAGE(r.ok(), first_failure(r));
}

TEST_CASE("invalid module setups") {
  CHECK_THROWS_AS(InducedModule(Algebra::get(Kind::SDaHa, 2), FiniteModule::basic_spin(2), PolySide::Y),
                  std::invalid_argument);
  CHECK_THROWS_AS(InducedModule(Algebra::get(Kind::SDaHa, 2), FiniteModule::regular_spin(2), PolySide::X),
                  std::invalid_argument);
  CHECK_THROWS_AS(InducedModule(Algebra::get(Kind::AffineHC, 2), FiniteModule::basic_spin(2), PolySide::Y),
                  std::invalid_argument);
  InducedModule m = y_module(2);
  CHECK_THROWS_AS(dunkl_y(m, 1, InducedVector{}), std::invalid_argument);
  CHECK_THROWS_AS(dunkl_x(m, 3, InducedVector{}), RankError);
}
