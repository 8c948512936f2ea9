#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinhecke/morphisms.hpp"

using namespace spinhecke;

namespace {

std::string first_failure(const Report& r) {
  for (const auto& c : r.results)
    if (!c.pass) return c.id + " -> " + c.witness;
  return {};
}

std::string image(MorphismName m, int n, const std::string& gen) {
  Morphism f = make_morphism(m, n);
  for (const Letter& l : generators(f.source()))
    if (letter_name(f.source(), l) == gen) return f.apply_word({l}).to_string();
  return "<missing>";
}

}  // namespace

TEST_CASE("names round-trip") {
  for (MorphismName m : all_morphisms()) {
    CHECK(parse_morphism(morphism_name(m)) == m);
    CHECK(inverse_of(inverse_of(m)) == m);
  }
  CHECK(parse_morphism("phi") == MorphismName::Phi);
  CHECK_THROWS_AS(parse_morphism("nope"), std::invalid_argument);
}

TEST_CASE("generator images") {
  CHECK(image(MorphismName::Phi, 2, "x1") == "w*c1*xi1");
  CHECK(image(MorphismName::Phi, 2, "s12") == "-1/2*w*c1*t1 + 1/2*w*c2*t1");
  CHECK(image(MorphismName::Psi, 2, "xi2") == "1/2*w*x2*c2");
  CHECK(image(MorphismName::PhiHat, 2, "a1") == "w*c1*b1");
  CHECK(image(MorphismName::PhiTr, 2, "epsv(2)") == "w*c2*zeta(2)");
  CHECK(image(MorphismName::J, 2, "epsv(2)") == "x2*y2");
  CHECK(image(MorphismName::Iota, 2, "y1^-1") == "einv(1)");
  CHECK(image(MorphismName::JMinus, 2, "zeta(1)") == "xi1*y1 + u*t1");
}

TEST_CASE("sources and targets") {
  Morphism phi = make_morphism(MorphismName::Phi, 3);
  CHECK(phi.source().name() == "DaHCa");
  CHECK(phi.target().name() == "Cl(x)SDaHa");
  Morphism iota = make_morphism(MorphismName::Iota, 2);
  CHECK(iota.source().name() == "DaHCa[y^-1]");
  CHECK(make_morphism(MorphismName::IotaMinus, 2, true).source().name() == "Cl(x)SDaHa[y^-1]");
  CHECK_THROWS(make_morphism(MorphismName::Phi, 2, true));
}

TEST_CASE("all maps are homomorphisms with inverses") {
  for (int n = 2; n <= 3; ++n)
    for (MorphismName m : all_morphisms()) {
      Report r = verify_morphism(m, n);
      CHECK(r.results.size() > 0);
      CHECK_MESSAGE(r.ok(), (morphism_name(m) + " n=" + std::to_string(n) + ": " + first_failure(r)));
    }
}

TEST_CASE("distinguished images and the compatibility square") {
  for (int n = 2; n <= 4; ++n) {
    Report d = check_distinguished_images(n);
    CHECK_MESSAGE(d.ok(), first_failure(d));
  }
  for (int n = 2; n <= 3; ++n) {
    Report s = check_compatibility_square(n);
    CHECK_MESSAGE(s.ok(), first_failure(s));
  }
}

TEST_CASE("a wrong image is caught") {
  // Dropping the Clifford factor from x_i breaks c_i x_i = -x_i c_i.
  Morphism good = make_morphism(MorphismName::Phi, 2);
  Morphism bad("bad", good.source(), good.target());
  for (const Letter& l : generators(good.source())) {
    if (l.slot == Slot::Group) continue;
    bad.set(l, good.apply_word({l}));
  }
  bad.set(simple_letter(good.source(), 1), good.image(simple_letter(good.source(), 1)));
  Element xi1 = left_gen(good.target(), 1);
  bad.set(left_letter(good.source(), 1), Scalar::omega() * xi1);
  CHECK_FALSE(check_homomorphism(bad).ok());
}
