// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

#include "braid_oracle.hpp"
#include "spinhecke/clifford_family.hpp"
#include "spinhecke/dunkl.hpp"
#include "spinhecke/morphisms.hpp"
#include "spinhecke/spin_family.hpp"

using namespace spinhecke;

namespace {

const std::vector<Kind> kKinds = {Kind::Sym,        Kind::CliffordSym, Kind::SpinSym,
                                  Kind::AffineHC,   Kind::SpinAffine,  Kind::DaHCa,
                                  Kind::SDaHa,      Kind::TrigDaHCa,   Kind::TrigSDaHa};

const Algebra& specialized(Kind k, int n, long u0) {
  AlgebraSpec s;
  s.kind = k;
  s.n = n;
  s.u_value = QOmega(u0);
  return Algebra::get(s);
}

std::string first_failure(const Report& r) {
  for (const auto& c : r.results)
    if (!c.pass) return c.id + (c.witness.empty() ? "" : " -> " + c.witness);
  return {};
}

int failures = 0;

void criterion(const std::string& id, const std::function<Report()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r.add("exception", false, e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = r.ok() && r.passed() > 0;
  if (!ok) ++failures;
  std::cout << id << (ok ? " PASS" : " FAIL") << "  (" << r.passed() << " checks passed, " << r.failed()
            << " failed, " << static_cast<int>(secs * 10) / 10.0 << " s)";
  if (!r.ok()) std::cout << "  first failure: " << first_failure(r);
  std::cout << std::endl;
}

const std::vector<Scalar> kAlphas = {Scalar(0), Scalar(1), Scalar::u()};

}  // namespace

int main() {
  criterion("AC1", [] {
    Report r;
    for (Kind k : kKinds)
      for (int n = 2; n <= 4; ++n) {
        const Algebra& a = Algebra::get(k, n);
        r.append(verify_relations(a), a.name() + ": ");
      }
    return r;
  });

  criterion("AC2", [] {
    Report r;
    ConfluenceOptions opt;
    opt.trials = 500;
    opt.degree_bound = 3;
    opt.seed = 500;
    for (Kind k : kKinds) {
      const Algebra& a = Algebra::get(k, 3);
      r.append(confluence_probe(a, opt), a.name() + ": ");
    }
    return r;
  });

  criterion("AC3", [] {
    Report r;
    for (int n = 2; n <= 3; ++n)
      for (MorphismName m : {MorphismName::PhiFin, MorphismName::PhiHat, MorphismName::Phi, MorphismName::PhiTr}) {
        r.append(verify_morphism(m, n));
        // The inverses are homomorphisms too.
        r.append(check_homomorphism(make_morphism(inverse_of(m), n)));
      }
    return r;
  });

  criterion("AC4", [] {
    Report r;
    for (int n = 2; n <= 3; ++n)
      for (const Scalar& al : kAlphas) {
        r.append(affine_embedding_check(n, al), "alpha = " + al.to_string() + ": ");
        r.append(spin_affine_embedding_check(n, al), "alpha = " + al.to_string() + ": ");
      }
    return r;
  });

  criterion("AC5", [] {
    Report r;
    for (int n = 2; n <= 4; ++n) {
      r.append(jucys_murphy_check(n));
      r.append(odd_jm_check(n));
      r.append(commuting_family_check(n, kAlphas));
      r.append(spin_commuting_family_check(n, kAlphas));
    }
    Element w = z_asymmetry_witness();
    r.add("[y1, z2] - [y2, z1] is nonzero at n = 2", !w.is_zero(), w.to_string());
    return r;
  });

  criterion("AC6", [] {
    Report r;
    for (int n = 2; n <= 4; ++n) {
      r.append(intertwiner_check(n));
      r.append(spin_intertwiner_check(n));
      r.append(check_distinguished_images(n));
    }
    return r;
  });

  criterion("AC7", [] {
    Report r;
    for (int n = 2; n <= 3; ++n) {
      r.append(verify_module(InducedModule(Algebra::get(Kind::DaHCa, n), FiniteModule::basic_spin(n), PolySide::Y), 4));
      r.append(verify_module(InducedModule(Algebra::get(Kind::SDaHa, n), FiniteModule::regular_spin(n), PolySide::Y), 4));
      r.append(verify_module(InducedModule(Algebra::get(Kind::DaHCa, n), FiniteModule::basic_spin(n), PolySide::X), 4));
    }
    // The spin action is the Clifford one pulled back along Psi.
    r.append(transport_check(2, 4));
    return r;
  });

  criterion("AC8", [] {
    Report r;
    for (int n = 2; n <= 3; ++n)
      for (Kind k : {Kind::DaHCa, Kind::SDaHa}) {
        const Algebra& a = Algebra::get(k, n);
        for (int p = 1; p <= 3; ++p) {
          r.append(center_check(power_sum_y(a, p)), a.name() + " p" + std::to_string(p) + "(y): ");
          r.append(center_check(power_sum_left_squares(a, p)), a.name() + " p" + std::to_string(p) + "(x^2): ");
        }
      }
    r.append(center_check(dahca_center_example(Algebra::get(Kind::DaHCa, 2))), "DaHCa example: ");
    r.append(center_check(sdaha_center_example(Algebra::get(Kind::SDaHa, 2))), "SDaHa example: ");
    {
      // The example forms written without u.
      const Algebra& a = specialized(Kind::DaHCa, 2, 1);
      Element x1 = left_gen(a, 1), x2 = left_gen(a, 2), s = simple_gen(a, 1), c1 = cliff_gen(a, 1);
      r.append(center_check(x1 * x1 * right_gen(a, 1) + x2 * x2 * right_gen(a, 2) - (x1 + x2) * s - c1 * (x1 + x2) * s * c1),
               "DaHCa example at u = 1: ");
      const Algebra& b = specialized(Kind::SDaHa, 2, 2);
      Element xi1 = left_gen(b, 1), xi2 = left_gen(b, 2);
      r.append(center_check(xi1 * xi1 * right_gen(b, 1) + xi2 * xi2 * right_gen(b, 2) +
                            Scalar(2) * (xi1 - xi2) * simple_gen(b, 1)),
               "SDaHa example at u = 2: ");
    }
    const Algebra& a = Algebra::get(Kind::DaHCa, 2);
    Report bad = center_check(left_gen(a, 1) * right_gen(a, 1));
    r.add("x1*y1 is rejected", !bad.ok(), first_failure(bad));
    return r;
  });

  criterion("AC9", [] {
    Report r;
    for (int n = 2; n <= 3; ++n) {
      r.append(check_inverse_pair(make_morphism(MorphismName::Iota, n), make_morphism(MorphismName::J, n)));
      r.append(check_inverse_pair(make_morphism(MorphismName::IotaMinus, n), make_morphism(MorphismName::JMinus, n)));
      r.append(trig_leibniz_check(Algebra::get(Kind::TrigDaHCa, n), 200, 3, 90 + n));
      r.append(trig_leibniz_check(Algebra::get(Kind::TrigSDaHa, n), 200, 3, 190 + n));
    }
    return r;
  });

  criterion("AC10", [] {
    Report r;
    const SymmetricGroup& g = SymmetricGroup::get(5);
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    int bad = 0;
    std::string witness;
    for (int t = 0; t < 1000; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      // beta(a,b) beta(ab,c) = beta(b,c) beta(a,bc)
      int lhs = g.spin_cocycle(a, b) * g.spin_cocycle(g.compose(a, b), c);
      int rhs = g.spin_cocycle(b, c) * g.spin_cocycle(a, g.compose(b, c));
      if (lhs != rhs && bad++ == 0) witness = std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
    }
    r.add("2-cocycle identity on 1000 random triples at n = 5", bad == 0, witness);
    for (int n = 1; n <= 4; ++n) {
      const SymmetricGroup& h = SymmetricGroup::get(n);
      int mismatch = 0;
      std::string w;
      for (int a = 0; a < h.order(); ++a)
        for (int b = 0; b < h.order(); ++b)
          if (h.spin_cocycle(a, b) != oracle::cocycle(h.element(a), h.element(b)) && mismatch++ == 0)
            w = std::to_string(a) + "," + std::to_string(b);
      r.add("beta agrees with word rewriting, n = " + std::to_string(n), mismatch == 0, w);
    }
    return r;
  });

  return failures == 0 ? 0 : 1;
}
