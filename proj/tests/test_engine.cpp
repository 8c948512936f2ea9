#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinhecke/engine.hpp"

using namespace spinhecke;

namespace {

const Kind kAllKinds[] = {Kind::Sym,        Kind::CliffordSym, Kind::SpinSym,
                          Kind::AffineHC,   Kind::SpinAffine,  Kind::DaHCa,
                          Kind::SDaHa,      Kind::TrigDaHCa,   Kind::TrigSDaHa};

std::string first_failure(const Report& r) {
  for (const auto& c : r.results)
    if (!c.pass) return c.id + " -> " + c.witness;
  return {};
}

}  // namespace

TEST_CASE("hand-computed normal forms in DaHCa") {
  const Algebra& a = Algebra::get(Kind::DaHCa, 2);
  Element x1 = left_gen(a, 1), y1 = right_gen(a, 1), y2 = right_gen(a, 2);
  CHECK((y1 * x1).to_string() == "x1*y1 - u*s12 - u*s12*c1*c2");
  CHECK((y2 * x1).to_string() == "x1*y2 + u*s12 + u*s12*c1*c2");
  Element c1 = cliff_gen(a, 1);
  CHECK(c1 * c1 == one(a));
  CHECK((c1 * x1).to_string() == "-x1*c1");
  Element s = simple_gen(a, 1);
  CHECK((s * x1).to_string() == "x2*s12");
  CHECK((y1 * s).to_string() == "s12*y2");
  CHECK((c1 * s).to_string() == "s12*c2");
}

TEST_CASE("spin group products") {
  const Algebra& a = Algebra::get(Kind::SpinSym, 3);
  Element t1 = simple_gen(a, 1), t2 = simple_gen(a, 2);
  CHECK(t1 * t1 == one(a));
  CHECK(t1 * t2 * t1 == t2 * t1 * t2);
  const Algebra& b = Algebra::get(Kind::SpinSym, 4);
  CHECK(simple_gen(b, 1) * simple_gen(b, 3) == -(simple_gen(b, 3) * simple_gen(b, 1)));
  // [1,3] = -t2 t1 t2 with the sign convention of the odd transposition.
  CHECK(odd_transposition(a, 1, 3) == -(t2 * t1 * t2));
  CHECK(odd_transposition(a, 1, 3) == -odd_transposition(a, 3, 1));
}

TEST_CASE("affine Hecke-Clifford cross relation") {
  const Algebra& a = Algebra::get(Kind::AffineHC, 2);
  Element s = simple_gen(a, 1), a1 = left_gen(a, 1), a2 = left_gen(a, 2);
  Element c1 = cliff_gen(a, 1), c2 = cliff_gen(a, 2);
  CHECK(a2 * s - s * a1 == one(a) - c2 * c1);
  CHECK((s * a1).to_string() == "a2*s12 - 1 - c1*c2");
}

TEST_CASE("spin affine cross relation") {
  const Algebra& a = Algebra::get(Kind::SpinAffine, 3);
  Element t1 = simple_gen(a, 1), b1 = left_gen(a, 1), b2 = left_gen(a, 2), b3 = left_gen(a, 3);
  CHECK(b2 * t1 + t1 * b1 == one(a));
  CHECK(t1 * b3 == -(b3 * t1));
  CHECK(b1 * b2 == -(b2 * b1));
}

TEST_CASE("sDaHa commutator") {
  const Algebra& a = Algebra::get(Kind::SDaHa, 2);
  Element y1 = right_gen(a, 1), xi1 = left_gen(a, 1), xi2 = left_gen(a, 2);
  Scalar u = Scalar::u();
  CHECK(bracket(y1, xi2) == u * odd_transposition(a, 1, 2));
  CHECK(bracket(y1, xi1) == u * odd_transposition(a, 1, 2));
}

TEST_CASE("trigonometric base commutators") {
  const Algebra& a = Algebra::get(Kind::TrigDaHCa, 2);
  Element e1 = left_gen(a, 1), e2 = left_gen(a, 2);
  Element v1 = right_gen(a, 1);
  Element s = simple_gen(a, 1), c1 = cliff_gen(a, 1), c2 = cliff_gen(a, 2);
  Scalar u = Scalar::u();
  // [epsv_1, e^{eps_2}] = -u e^{eps_1} (1 - c_1 c_2) s_12
  CHECK(bracket(v1, e2) == -u * e1 * (one(a) - c1 * c2) * s);
  CHECK(e1 * left_gen(a, 1, -1) == one(a));
  CHECK((v1 * e1).to_string().find("e(1)*epsv(1)") == 0);
}

TEST_CASE("rendering and parity") {
  const Algebra& a = Algebra::get(Kind::TrigSDaHa, 2);
  CHECK(left_gen(a, 1, -1).to_string() == "einv(1)");
  CHECK(right_gen(a, 2).to_string() == "zeta(2)");
  CHECK(right_gen(a, 2).parity() == Parity::Odd);
  CHECK(simple_gen(a, 1).parity() == Parity::Odd);
  CHECK((one(a) + simple_gen(a, 1)).parity() == Parity::Mixed);
  CHECK(Element(a).to_string() == "0");
  CHECK((Scalar(2) * pow(left_gen(a, 1), 2)).to_string() == "2*e(1)^2");
  const Algebra& s3 = Algebra::get(Kind::Sym, 3);
  CHECK((simple_gen(s3, 1) * simple_gen(s3, 2)).to_string() == "s12*s23");
  CHECK((simple_gen(s3, 1) * simple_gen(s3, 2) * simple_gen(s3, 1)).to_string() == "s13");
  CHECK((one(s3) + Scalar::omega() * simple_gen(s3, 1)).to_string() == "1 + w*s12");
}

TEST_CASE("external Clifford factor supercommutes") {
  AlgebraSpec spec;
  spec.kind = Kind::SDaHa;
  spec.n = 2;
  spec.tensor = true;
  const Algebra& a = Algebra::get(spec);
  Element c1 = ext_gen(a, 1), t = simple_gen(a, 1), xi = left_gen(a, 1), y = right_gen(a, 1);
  CHECK(c1 * t == -(t * c1));
  CHECK(c1 * xi == -(xi * c1));
  CHECK(c1 * y == y * c1);
  CHECK(cliff_gen(a, 2).to_string() == "c2");
  CHECK(a.name() == "Cl(x)SDaHa");
}

TEST_CASE("localized y") {
  AlgebraSpec spec;
  spec.kind = Kind::DaHCa;
  spec.n = 2;
  spec.localized = true;
  const Algebra& a = Algebra::get(spec);
  Element y = right_gen(a, 1), yi = right_gen(a, 1, -1), x = left_gen(a, 2);
  CHECK(y * yi == one(a));
  CHECK(yi * y == one(a));
  // y^{-1} x y - x must equal -y^{-1}[y, x].
  CHECK(yi * x * y - x == -(yi * bracket(y, x)));
  CHECK(a.name() == "DaHCa[y^-1]");
}

TEST_CASE("rank errors") {
  const Algebra& a = Algebra::get(Kind::DaHCa, 2);
  CHECK_THROWS_AS(left_gen(a, 3), RankError);
  CHECK_THROWS_AS(simple_gen(a, 2), RankError);
  CHECK_THROWS_AS(Algebra::get(Kind::Sym, 7), RankError);
  CHECK_THROWS_AS(left_gen(Algebra::get(Kind::Sym, 2), 1), RankError);
}

TEST_CASE("defining relations hold in every algebra") {
  for (Kind k : kAllKinds) {
    for (int n : {1, 2, 3}) {
      for (bool tensor : {false, true}) {
        AlgebraSpec spec;
        spec.kind = k;
        spec.n = n;
        spec.tensor = tensor;
        const Algebra& a = Algebra::get(spec);
        Report r = verify_relations(a);
        INFO(a.name(), " n=", n, " ", first_failure(r));
        CHECK(r.ok());
      }
    }
  }
  for (Kind k : {Kind::DaHCa, Kind::SDaHa}) {
    AlgebraSpec spec;
    spec.kind = k;
    spec.n = 3;
    spec.localized = true;
    Report r = verify_relations(Algebra::get(spec));
    INFO(kind_name(k), " localized ", first_failure(r));
    CHECK(r.ok());
  }
}

TEST_CASE("defining relations at rank 4") {
  for (Kind k : {Kind::DaHCa, Kind::SDaHa, Kind::TrigDaHCa, Kind::TrigSDaHa}) {
    Report r = verify_relations(Algebra::get(k, 4));
    INFO(kind_name(k), " ", first_failure(r));
    CHECK(r.ok());
  }
}

TEST_CASE("associativity and idempotence on random monomials") {
  for (Kind k : kAllKinds) {
    for (int n : {2, 3}) {
      const Algebra& a = Algebra::get(k, n);
      ConfluenceOptions opt;
      opt.trials = 40;
      opt.degree_bound = 2;
      opt.seed = 11 + n;
      Report r = confluence_probe(a, opt);
      INFO(a.name(), " n=", n, " ", first_failure(r));
      CHECK(r.ok());
    }
  }
  AlgebraSpec spec;
  spec.kind = Kind::TrigSDaHa;
  spec.n = 3;
  spec.tensor = true;
  Report r = confluence_probe(Algebra::get(spec), {30, 2, 5, 1});
  INFO(first_failure(r));
  CHECK(r.ok());
}

TEST_CASE("degree filtration: products stay within the sum of degrees") {
  std::mt19937_64 rng(3);
  for (Kind k : {Kind::DaHCa, Kind::SDaHa, Kind::AffineHC, Kind::SpinAffine}) {
    const Algebra& a = Algebra::get(k, 3);
    for (int trial = 0; trial < 30; ++trial) {
      Element p(a, random_monomial(a, 2, rng)), q(a, random_monomial(a, 2, rng));
      Element pq = p * q;
      CHECK(pq.degree() <= p.degree() + q.degree());
    }
  }
}

TEST_CASE("specialization") {
  const Algebra& a = Algebra::get(Kind::DaHCa, 2);
  Element e = bracket(right_gen(a, 2), left_gen(a, 1));
  Element z = specialize(e, QOmega(0));
  CHECK(z.is_zero());
  Element w = specialize(e, QOmega(2));
  CHECK(w.algebra().spec().u_value.has_value());
  CHECK(w.to_string() == "2*s12 + 2*s12*c1*c2");
}
