#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinhecke/parser.hpp"

using namespace spinhecke;

namespace {

std::string norm(const std::string& text, Kind k, int n = 2) {
  return parse_element(text, Algebra::get(k, n)).to_string();
}

Scalar fraction(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return Scalar(r);
}

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 7), small(-4, 4), pos(1, 5);
  Scalar u = Scalar::u(), w = Scalar::omega();
  switch (pick(rng)) {
    case 0: return Scalar(small(rng));
    case 1: return fraction(small(rng), pos(rng));
    case 2: return Scalar(small(rng)) * w + Scalar(pos(rng));
    case 3: return u * Scalar(small(rng) | 1);
    case 4: return (Scalar(1) + Scalar(2) * w) / u;
    case 5: return (u * u - Scalar(pos(rng))) / (u + w);
    case 6: return fraction(-1, pos(rng)) * w * u;
    default: return u.pow(small(rng)) + Scalar(small(rng));
  }
}

Element random_element(const Algebra& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 4);
  Element e(a);
  int k = terms(rng);
  for (int t = 0; t < k; ++t) e += Element(a, random_monomial(a, 3, rng), random_scalar(rng));
  return e;
}

}  // namespace

TEST_CASE("examples") {
  CHECK(norm("y1*x1", Kind::DaHCa) == "x1*y1 - u*s12 - u*s12*c1*c2");
  CHECK(norm("[y2, x1]", Kind::DaHCa) == "u*s12 + u*s12*c1*c2");
  CHECK(norm("{xi1, xi2}", Kind::SDaHa) == "0");
  CHECK(norm("u^-1 * y1*x1 + M(1)", Kind::DaHCa) == norm("z(1)", Kind::DaHCa));
  CHECK(norm("tr(1,2)", Kind::SpinSym) == "t1");
  CHECK(norm("tr(2,1)", Kind::SpinSym) == "-t1");
  CHECK(norm("s(1,3)", Kind::Sym, 3) == "s13");
  CHECK(norm("s13", Kind::Sym, 3) == "s13");
  CHECK(norm("s1*s2", Kind::Sym, 3) == "s12*s23");
  CHECK(norm("e(1)*einv(1)", Kind::TrigDaHCa) == "1");
  CHECK(norm("e(1)^-2", Kind::TrigDaHCa) == "einv(1)^2");
  CHECK(parse_element("y1^-1*y1", Algebra::get(AlgebraSpec{Kind::DaHCa, 2, false, true, {}})).to_string() == "1");
}

TEST_CASE("precedence and associativity") {
  CHECK(norm("2 + 3*4", Kind::Sym) == "14");
  CHECK(norm("2*3^2", Kind::Sym) == "18");
  CHECK(norm("-2^2", Kind::Sym) == "-4");
  CHECK(norm("8/2/2", Kind::Sym) == "2");
  CHECK(norm("5 - 2 - 1", Kind::Sym) == "2");
  CHECK(norm("w*w", Kind::Sym) == "-2");
  CHECK(norm("1/w", Kind::Sym) == "-1/2*w");
  CHECK(norm("(x1 + x2)^2", Kind::DaHCa) == norm("x1^2 + 2*x1*x2 + x2^2", Kind::DaHCa));
  CHECK(norm("x1/2", Kind::DaHCa) == "1/2*x1");
}

TEST_CASE("scalars") {
  CHECK(parse_scalar("(u^2 - 1)/(u - 1)") == Scalar::u() + Scalar(1));
  CHECK(parse_scalar("(1 + 2*w)/u").to_string() == "(1 + 2*w)/u");
  CHECK_THROWS_AS(parse_scalar("x1"), ParseError);
}

TEST_CASE("errors carry positions") {
  const Algebra& a = Algebra::get(Kind::DaHCa, 2);
  auto pos = [&](const std::string& s) {
    try {
      parse_element(s, a);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(pos("x1 + q2") == 5);
  CHECK(pos("x1 * x3") == 5);
  CHECK(pos("x1 + ") == 5);
  CHECK(pos("x1 $ x2") == 3);
  CHECK(pos("(x1") == 3);
  CHECK(pos("x1 / x2") == 3);
  CHECK(pos("x1^-1") == 2);
  CHECK(pos("t1") == 0);  // no spin group in DaHCa
  CHECK(pos("x1 / 0") == 3);
  CHECK(pos("x1") == -1);
}

TEST_CASE("generator tokens are checked against the algebra") {
  CHECK_THROWS_AS(parse_expression("xi1", Algebra::get(Kind::DaHCa, 2)), ParseError);
  CHECK_THROWS_AS(parse_expression("c1", Algebra::get(Kind::SDaHa, 2)), ParseError);
  CHECK_THROWS_AS(parse_expression("z(1)", Algebra::get(Kind::SDaHa, 2)), ParseError);
  CHECK_NOTHROW(parse_expression("c1*xi1", Algebra::get(AlgebraSpec{Kind::SDaHa, 2, true, false, {}})));
  CHECK_NOTHROW(parse_expression("C1*x1*c1", Algebra::get(AlgebraSpec{Kind::DaHCa, 2, true, false, {}})));
}

TEST_CASE("AST rendering") {
  Expr e = parse_expression("-x1 + [y1, s12]^2", Algebra::get(Kind::DaHCa, 2));
  CHECK(e.to_string() == "((-x(1)) + ([y(1), s(1,2)]^2))");
}

TEST_CASE("round trip: parse(render(e)) = e") {
  std::vector<AlgebraSpec> specs;
  for (Kind k : {Kind::Sym, Kind::CliffordSym, Kind::SpinSym, Kind::AffineHC, Kind::SpinAffine, Kind::DaHCa,
                 Kind::SDaHa, Kind::TrigDaHCa, Kind::TrigSDaHa})
    specs.push_back({k, 3, false, false, {}});
  for (Kind k : {Kind::CliffordSym, Kind::SpinSym, Kind::AffineHC, Kind::SpinAffine, Kind::SDaHa, Kind::TrigSDaHa})
    specs.push_back({k, 3, true, false, {}});
  specs.push_back({Kind::DaHCa, 3, false, true, {}});
  specs.push_back({Kind::SDaHa, 3, true, true, {}});
  std::mt19937_64 rng(2024);
  for (const AlgebraSpec& s : specs) {
    const Algebra& a = Algebra::get(s);
    int bad = 0;
    std::string example;
    for (int t = 0; t < 500; ++t) {
      Element e = random_element(a, rng);
      std::string text = e.to_string();
      Element back = parse_element(text, a);
      if (!(back == e)) {
        ++bad;
        if (example.empty()) example = text + " reparsed as " + back.to_string();
      }
    }
    CHECK_MESSAGE(bad == 0, (a.name() + ": " + example));
  }
}
