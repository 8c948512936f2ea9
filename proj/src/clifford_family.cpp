#include "spinhecke/clifford_family.hpp"

#include <random>
#include <stdexcept>

#include "spinhecke/homomorphism.hpp"

namespace spinhecke {

namespace {

void require_plain_clifford(const Algebra& a, const char* what) {
  if (a.group_kind() != GroupKind::Plain || !a.has_cliff())
    throw std::invalid_argument(std::string(what) + " needs a Hecke-Clifford algebra, got " + a.name());
}

void require_kind(const Algebra& a, Kind k, const char* what) {
  if (a.kind() != k) throw std::invalid_argument(std::string(what) + " needs " + kind_name(k) + ", got " + a.name());
}

Scalar u_inverse(const Algebra& a) {
  Scalar u = a.u();
  if (u.is_zero()) throw std::domain_error("u^{-1} is undefined at u = 0");
  return u.inverse();
}

std::string tag(const Scalar& alpha) { return " alpha=" + alpha.to_string(); }

}  // namespace

Element jucys_murphy(const Algebra& a, int i) {
  require_plain_clifford(a, "jucys_murphy");
  if (i < 1 || i > a.n()) throw RankError("JM index out of range");
  Element m(a);
  for (int k = 1; k < i; ++k)
    m += (one(a) - cliff_gen(a, i) * cliff_gen(a, k)) * transposition(a, k, i);
  return m;
}

Element z_element(const Algebra& a, int i) {
  require_kind(a, Kind::DaHCa, "z_element");
  return u_inverse(a) * right_gen(a, i) * left_gen(a, i) + jucys_murphy(a, i);
}

Element embedded_generator(const Algebra& a, const Scalar& alpha, int i) {
  return alpha * left_gen(a, i) + z_element(a, i);
}

Element intertwiner_phi(const Algebra& a, int i) {
  require_kind(a, Kind::AffineHC, "intertwiner_phi");
  if (i < 1 || i >= a.n()) throw RankError("intertwiner index out of range");
  Element ai = left_gen(a, i), aj = left_gen(a, i + 1);
  return simple_gen(a, i) * (ai * ai - aj * aj) + (ai + aj) +
         cliff_gen(a, i) * cliff_gen(a, i + 1) * (ai - aj);
}

Report affine_embedding_check(int n, const Scalar& alpha) {
  const Algebra& src = Algebra::get(Kind::AffineHC, n);
  const Algebra& dst = Algebra::get(Kind::DaHCa, n);
  Morphism m("embed" + tag(alpha), src, dst);
  for (int i = 1; i <= n; ++i) {
    m.set(left_letter(src, i), embedded_generator(dst, alpha, i));
    m.set(cliff_letter(src, i), cliff_gen(dst, i));
  }
  for (int i = 1; i < n; ++i) m.set(simple_letter(src, i), simple_gen(dst, i));
  Report rep;
  rep.append(check_homomorphism(m), "embedding" + tag(alpha) + ": ");
  return rep;
}

Report evaluation_hom_check(int n) {
  const Algebra& src = Algebra::get(Kind::AffineHC, n);
  const Algebra& dst = Algebra::get(Kind::CliffordSym, n);
  Morphism m("evaluation", src, dst);
  for (int i = 1; i <= n; ++i) {
    m.set(left_letter(src, i), jucys_murphy(dst, i));
    m.set(cliff_letter(src, i), cliff_gen(dst, i));
  }
  for (int i = 1; i < n; ++i) m.set(simple_letter(src, i), simple_gen(dst, i));
  Report rep;
  rep.add_zero("evaluation: a_1 -> 0", m.apply(left_gen(src, 1)));
  rep.append(check_homomorphism(m), "evaluation: ");
  return rep;
}

Report commuting_family_check(int n, const std::vector<Scalar>& alphas) {
  const Algebra& a = Algebra::get(Kind::DaHCa, n);
  Report rep;
  std::vector<Element> z, x, c;
  for (int i = 1; i <= n; ++i) {
    z.push_back(z_element(a, i));
    x.push_back(left_gen(a, i));
    c.push_back(cliff_gen(a, i));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::string ij = " i,j=" + std::to_string(i + 1) + "," + std::to_string(j + 1);
      if (i < j) {
        rep.add_zero("[z_i, z_j]" + ij, bracket(z[i], z[j]));
        rep.add_zero("[x_i, z_j] - [x_j, z_i]" + ij, bracket(x[i], z[j]) - bracket(x[j], z[i]));
        for (const Scalar& al : alphas)
          rep.add_zero("[alpha x_i + z_i, alpha x_j + z_j]" + ij + tag(al),
                       bracket(al * x[i] + z[i], al * x[j] + z[j]));
      }
      if (i == j) rep.add_zero("c_i z_i + z_i c_i" + ij, c[i] * z[i] + z[i] * c[i]);
      else rep.add_zero("c_j z_i - z_i c_j" + ij, c[j] * z[i] - z[i] * c[j]);
    }
  }
  for (int i = 1; i < n; ++i) {
    Element s = simple_gen(a, i);
    Element rhs = one(a) - c[i] * c[i - 1];
    rep.add_zero("z_(i+1) s_i - s_i z_i = 1 - c_(i+1) c_i i=" + std::to_string(i), z[i] * s - s * z[i - 1] - rhs);
    for (const Scalar& al : alphas) {
      Element p = al * x[i] + z[i], q = al * x[i - 1] + z[i - 1];
      rep.add_zero("(alpha x_(i+1) + z_(i+1)) s_i - s_i (alpha x_i + z_i) i=" + std::to_string(i) + tag(al),
                   p * s - s * q - rhs);
    }
  }
  return rep;
}

Element z_asymmetry_witness() {
  const Algebra& a = Algebra::get(Kind::DaHCa, 2);
  return bracket(right_gen(a, 1), z_element(a, 2)) - bracket(right_gen(a, 2), z_element(a, 1));
}

Report intertwiner_check(int n) {
  const Algebra& a = Algebra::get(Kind::AffineHC, n);
  Report rep;
  std::vector<Element> phi;
  for (int i = 1; i < n; ++i) phi.push_back(intertwiner_phi(a, i));
  for (int i = 1; i < n; ++i) {
    Element ai2 = pow(left_gen(a, i), 2), aj2 = pow(left_gen(a, i + 1), 2);
    Element d = ai2 - aj2;
    std::string id = " i=" + std::to_string(i);
    rep.add_zero("phi_i^2 = 2a_i^2 + 2a_(i+1)^2 - (a_i^2 - a_(i+1)^2)^2" + id,
                 phi[i - 1] * phi[i - 1] - (Scalar(2) * ai2 + Scalar(2) * aj2 - d * d));
    if (i + 1 < n)
      rep.add_zero("phi braid" + id, phi[i - 1] * phi[i] * phi[i - 1] - phi[i] * phi[i - 1] * phi[i]);
    for (int j = i + 2; j < n; ++j)
      rep.add_zero("phi_i phi_j = phi_j phi_i i,j=" + std::to_string(i) + "," + std::to_string(j),
                   bracket(phi[i - 1], phi[j - 1]));
    // phi_i intertwines a_i and a_{i+1}.
    rep.add_zero("phi_i a_i = a_(i+1) phi_i" + id, phi[i - 1] * left_gen(a, i) - left_gen(a, i + 1) * phi[i - 1]);
  }
  return rep;
}

Report jucys_murphy_check(int n) {
  Report rep;
  for (Kind k : {Kind::CliffordSym, Kind::AffineHC, Kind::DaHCa}) {
    const Algebra& a = Algebra::get(k, n);
    std::string pre = kind_name(k) + ": ";
    rep.add_zero(pre + "M_1 = 0", jucys_murphy(a, 1));
    for (int i = 1; i <= n; ++i) {
      Element mi = jucys_murphy(a, i);
      rep.add(pre + "M_i even i=" + std::to_string(i), mi.is_zero() || mi.parity() == Parity::Even);
      for (int j = i + 1; j <= n; ++j)
        rep.add_zero(pre + "[M_i, M_j] i,j=" + std::to_string(i) + "," + std::to_string(j),
                     bracket(mi, jucys_murphy(a, j)));
      for (int j = 1; j <= n; ++j) {
        Element c = cliff_gen(a, j);
        if (i == j) rep.add_zero(pre + "c_i M_i = -M_i c_i i=" + std::to_string(i), c * mi + mi * c);
        else rep.add_zero(pre + "c_j M_i = M_i c_j i,j=" + std::to_string(i) + "," + std::to_string(j), bracket(c, mi));
      }
    }
  }
  return rep;
}

Report center_check(const Element& candidate) {
  const Algebra& a = candidate.algebra();
  Report rep;
  bool even = candidate.is_zero() || candidate.parity() == Parity::Even;
  rep.add("candidate is even", even, even ? "" : "odd or mixed parity");
  for (const Letter& l : generators(a)) {
    Element g = letter_element(a, l);
    rep.add_zero("[z, " + letter_name(a, l) + "]", bracket(candidate, g));
  }
  return rep;
}

Element power_sum_y(const Algebra& a, int k) {
  Element s(a);
  for (int i = 1; i <= a.n(); ++i) s += pow(right_gen(a, i), k);
  return s;
}

Element power_sum_left_squares(const Algebra& a, int k) {
  Element s(a);
  for (int i = 1; i <= a.n(); ++i) s += pow(left_gen(a, i), 2 * k);
  return s;
}

Element dahca_center_example(const Algebra& a) {
  require_kind(a, Kind::DaHCa, "dahca_center_example");
  if (a.n() != 2) throw RankError("the example lives at n = 2");
  Element x1 = left_gen(a, 1), x2 = left_gen(a, 2), y1 = right_gen(a, 1), y2 = right_gen(a, 2);
  Element s = simple_gen(a, 1), c1 = cliff_gen(a, 1);
  return x1 * x1 * y1 + x2 * x2 * y2 - a.u() * ((x1 + x2) * s + c1 * (x1 + x2) * s * c1);
}

Element trig_exponential(const Algebra& a, const std::vector<int>& eta) {
  if (static_cast<int>(eta.size()) != a.n()) throw RankError("weight has wrong length");
  Element e = one(a);
  for (int i = 0; i < a.n(); ++i)
    for (int k = 0; k < std::abs(eta[i]); ++k) e = e * left_gen(a, i + 1, eta[i] > 0 ? 1 : -1);
  return e;
}

Element trig_commutator(const Algebra& a, int i, const std::vector<int>& eta) {
  return evaluate(a, trig_commutator_terms(a, i, eta));
}

Report trig_leibniz_check(const Algebra& a, int trials, int height, std::uint64_t seed) {
  Report rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-height, height);
  std::uniform_int_distribution<int> idx(1, a.n());
  for (int t = 0; t < trials; ++t) {
    std::vector<int> eta(a.n());
    for (int& v : eta) v = d(rng);
    int i = idx(rng);
    Element e = trig_exponential(a, eta);
    std::string id = "[" + letter_name(a, right_letter(a, i)) + ", " + e.to_string() + "]";
    rep.add_zero(id, bracket(right_gen(a, i), e) - trig_commutator(a, i, eta));
  }
  return rep;
}

Report trig_affine_subalgebra_check(int n) {
  const Algebra& src = Algebra::get(Kind::AffineHC, n);
  const Algebra& dst = Algebra::get(Kind::TrigDaHCa, n);
  Morphism m("u^-1 epsv", src, dst);
  Scalar ui = u_inverse(dst);
  for (int i = 1; i <= n; ++i) {
    m.set(left_letter(src, i), ui * right_gen(dst, i));
    m.set(cliff_letter(src, i), cliff_gen(dst, i));
  }
  for (int i = 1; i < n; ++i) m.set(simple_letter(src, i), simple_gen(dst, i));
  Report rep;
  rep.append(check_homomorphism(m), "u^-1 epsv: ");
  return rep;
}

}  // namespace spinhecke
