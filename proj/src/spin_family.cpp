#include "spinhecke/spin_family.hpp"

#include <stdexcept>

#include "spinhecke/homomorphism.hpp"

namespace spinhecke {

namespace {

void require_kind(const Algebra& a, Kind k, const char* what) {
  if (a.kind() != k) throw std::invalid_argument(std::string(what) + " needs " + kind_name(k) + ", got " + a.name());
}

std::string tag(const Scalar& alpha) { return " alpha=" + alpha.to_string(); }
std::string ij(int i, int j) { return " i,j=" + std::to_string(i) + "," + std::to_string(j); }

}  // namespace

Element odd_jm(const Algebra& a, int i) {
  if (a.group_kind() != GroupKind::Spin) throw std::invalid_argument("odd_jm needs a spin algebra, got " + a.name());
  if (i < 1 || i > a.n()) throw RankError("JM index out of range");
  Element m(a);
  for (int k = 1; k < i; ++k) m += odd_transposition(a, k, i);
  return m;
}

Element frak_z(const Algebra& a, int i) {
  require_kind(a, Kind::SDaHa, "frak_z");
  Scalar u = a.u();
  if (u.is_zero()) throw std::domain_error("u^{-1} is undefined at u = 0");
  return u.inverse() * right_gen(a, i) * left_gen(a, i) + odd_jm(a, i);
}

Element spin_embedded_generator(const Algebra& a, const Scalar& alpha, int i) {
  return alpha * left_gen(a, i) + frak_z(a, i);
}

Element intertwiner_psi(const Algebra& a, int i) {
  require_kind(a, Kind::SpinAffine, "intertwiner_psi");
  if (i < 1 || i >= a.n()) throw RankError("intertwiner index out of range");
  Element bi = left_gen(a, i), bj = left_gen(a, i + 1);
  return simple_gen(a, i) * (bi * bi - bj * bj) - (bi - bj);
}

Report spin_affine_embedding_check(int n, const Scalar& alpha) {
  const Algebra& src = Algebra::get(Kind::SpinAffine, n);
  const Algebra& dst = Algebra::get(Kind::SDaHa, n);
  Morphism m("spin embed" + tag(alpha), src, dst);
  for (int i = 1; i <= n; ++i) m.set(left_letter(src, i), spin_embedded_generator(dst, alpha, i));
  for (int i = 1; i < n; ++i) m.set(simple_letter(src, i), simple_gen(dst, i));
  Report rep;
  rep.append(check_homomorphism(m), "spin embedding" + tag(alpha) + ": ");
  return rep;
}

Report spin_evaluation_hom_check(int n) {
  const Algebra& src = Algebra::get(Kind::SpinAffine, n);
  const Algebra& dst = Algebra::get(Kind::SpinSym, n);
  Morphism m("spin evaluation", src, dst);
  for (int i = 1; i <= n; ++i) m.set(left_letter(src, i), odd_jm(dst, i));
  for (int i = 1; i < n; ++i) m.set(simple_letter(src, i), simple_gen(dst, i));
  Report rep;
  rep.add_zero("spin evaluation: b_1 -> 0", m.apply(left_gen(src, 1)));
  rep.append(check_homomorphism(m), "spin evaluation: ");
  return rep;
}

Report spin_commuting_family_check(int n, const std::vector<Scalar>& alphas) {
  const Algebra& a = Algebra::get(Kind::SDaHa, n);
  Report rep;
  std::vector<Element> z, xi;
  for (int i = 1; i <= n; ++i) {
    z.push_back(frak_z(a, i));
    xi.push_back(left_gen(a, i));
    rep.add("fz_i odd i=" + std::to_string(i), z.back().parity() == Parity::Odd);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      rep.add_zero("[fz_i, fz_j]_+" + ij(i + 1, j + 1), super_bracket(z[i], z[j], true));
      rep.add_zero("[xi_i, fz_j]_+ + [xi_j, fz_i]_+" + ij(i + 1, j + 1),
                   super_bracket(xi[i], z[j], true) + super_bracket(xi[j], z[i], true));
      for (const Scalar& al : alphas)
        rep.add_zero("[alpha xi_i + fz_i, alpha xi_j + fz_j]_+" + ij(i + 1, j + 1) + tag(al),
                     super_bracket(al * xi[i] + z[i], al * xi[j] + z[j], true));
    }
  }
  for (int i = 1; i < n; ++i) {
    Element t = simple_gen(a, i);
    for (const Scalar& al : alphas) {
      Element p = al * xi[i] + z[i], q = al * xi[i - 1] + z[i - 1];
      rep.add_zero("(alpha xi_(i+1) + fz_(i+1)) t_i + t_i (alpha xi_i + fz_i) = 1 i=" + std::to_string(i) + tag(al),
                   p * t + t * q - one(a));
    }
  }
  return rep;
}

Report spin_intertwiner_check(int n) {
  const Algebra& a = Algebra::get(Kind::SpinAffine, n);
  Report rep;
  std::vector<Element> psi, b;
  for (int i = 1; i < n; ++i) psi.push_back(intertwiner_psi(a, i));
  for (int i = 1; i <= n; ++i) b.push_back(left_gen(a, i));
  for (int i = 1; i < n; ++i) {
    const Element& p = psi[i - 1];
    Element bi2 = b[i - 1] * b[i - 1], bj2 = b[i] * b[i];
    Element d = bi2 - bj2;
    std::string id = " i=" + std::to_string(i);
    rep.add("psi_i odd" + id, p.parity() == Parity::Odd);
    rep.add_zero("psi_i^2 = b_i^2 + b_(i+1)^2 - (b_i^2 - b_(i+1)^2)^2" + id, p * p - (bi2 + bj2 - d * d));
    if (i + 1 < n) rep.add_zero("psi braid" + id, p * psi[i] * p - psi[i] * p * psi[i]);
    for (int j = i + 2; j < n; ++j)
      rep.add_zero("psi_i psi_j = -psi_j psi_i" + ij(i, j), super_bracket(p, psi[j - 1], true));
    for (int j = 1; j <= n; ++j) {
      if (j == i) rep.add_zero("psi_i b_i = -b_(i+1) psi_i" + id, p * b[i - 1] + b[i] * p);
      else if (j == i + 1) rep.add_zero("psi_i b_(i+1) = -b_i psi_i" + id, p * b[i] + b[i - 1] * p);
      else rep.add_zero("psi_i b_j = -b_j psi_i" + ij(i, j), super_bracket(p, b[j - 1], true));
    }
  }
  return rep;
}

Report odd_jm_check(int n) {
  Report rep;
  for (Kind k : {Kind::SpinSym, Kind::SpinAffine, Kind::SDaHa}) {
    const Algebra& a = Algebra::get(k, n);
    std::string pre = kind_name(k) + ": ";
    rep.add_zero(pre + "M_1 = 0", odd_jm(a, 1));
    if (n >= 2) rep.add_zero(pre + "M_2 = t_1", odd_jm(a, 2) - simple_gen(a, 1));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        rep.add_zero(pre + "[M_i, M_j]_+" + ij(i, j), super_bracket(odd_jm(a, i), odd_jm(a, j), true));
  }
  const Algebra& g = Algebra::get(Kind::SpinSym, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Element t = odd_transposition(g, i, j);
      rep.add_zero("[i,j]^2 = 1" + ij(i, j), t * t - one(g));
      rep.add_zero("[i,j] = -[j,i]" + ij(i, j), t + odd_transposition(g, j, i));
    }
    if (i + 1 <= n) rep.add_zero("[i,i+1] = t_i i=" + std::to_string(i), odd_transposition(g, i, i + 1) - simple_gen(g, i));
  }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      Element t = simple_gen(g, i);
      rep.add_zero("t_i [i,j] t_i = -[i+1,j]" + ij(i, j), t * odd_transposition(g, i, j) * t + odd_transposition(g, i + 1, j));
    }
  return rep;
}

Element sdaha_center_example(const Algebra& a) {
  require_kind(a, Kind::SDaHa, "sdaha_center_example");
  if (a.n() != 2) throw RankError("the example lives at n = 2");
  Element xi1 = left_gen(a, 1), xi2 = left_gen(a, 2);
  return xi1 * xi1 * right_gen(a, 1) + xi2 * xi2 * right_gen(a, 2) + a.u() * (xi1 - xi2) * simple_gen(a, 1);
}

Element spin_trig_commutator(const Algebra& a, int i, const std::vector<int>& eta) {
  require_kind(a, Kind::TrigSDaHa, "spin_trig_commutator");
  return evaluate(a, trig_commutator_terms(a, i, eta));
}

}  // namespace spinhecke
