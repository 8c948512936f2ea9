#include "spinhecke/morphisms.hpp"

#include <cctype>
#include <stdexcept>

#include "spinhecke/clifford_family.hpp"
#include "spinhecke/spin_family.hpp"

namespace spinhecke {

namespace {

struct Info {
  MorphismName name;
  const char* text;
  MorphismName inverse;
};

const Info kInfo[] = {
    {MorphismName::PhiFin, "PhiFin", MorphismName::PsiFin},
    {MorphismName::PsiFin, "PsiFin", MorphismName::PhiFin},
    {MorphismName::PhiHat, "PhiHat", MorphismName::PsiHat},
    {MorphismName::PsiHat, "PsiHat", MorphismName::PhiHat},
    {MorphismName::Phi, "Phi", MorphismName::Psi},
    {MorphismName::Psi, "Psi", MorphismName::Phi},
    {MorphismName::PhiTr, "PhiTr", MorphismName::PsiTr},
    {MorphismName::PsiTr, "PsiTr", MorphismName::PhiTr},
    {MorphismName::Iota, "Iota", MorphismName::J},
    {MorphismName::J, "J", MorphismName::Iota},
    {MorphismName::IotaMinus, "IotaMinus", MorphismName::JMinus},
    {MorphismName::JMinus, "JMinus", MorphismName::IotaMinus},
};

const Info& info(MorphismName m) {
  for (const auto& i : kInfo)
    if (i.name == m) return i;
  throw std::logic_error("unknown morphism");
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

const Algebra& alg(Kind k, int n, bool tensor = false, bool localized = false) {
  AlgebraSpec s;
  s.kind = k;
  s.n = n;
  s.tensor = tensor;
  s.localized = localized;
  return Algebra::get(s);
}

const Scalar& omega() {
  static const Scalar w = Scalar::omega();
  return w;
}
const Scalar& omega_inv() {
  static const Scalar w = Scalar::omega().inverse();
  return w;
}

// s_i -> (1/w)(c_i - c_{i+1}) t_i and t_i -> (1/w)(c_{i+1} - c_i) s_i.
void set_simple_to_spin(Morphism& m, const Algebra& src, const Algebra& dst) {
  for (int i = 1; i < src.n(); ++i)
    m.set(simple_letter(src, i), omega_inv() * (cliff_gen(dst, i) - cliff_gen(dst, i + 1)) * simple_gen(dst, i));
}
void set_spin_to_simple(Morphism& m, const Algebra& src, const Algebra& dst) {
  for (int i = 1; i < src.n(); ++i)
    m.set(simple_letter(src, i), omega_inv() * (cliff_gen(dst, i + 1) - cliff_gen(dst, i)) * simple_gen(dst, i));
}
void set_cliff(Morphism& m, const Algebra& src, const Algebra& dst) {
  for (int i = 1; i <= src.n(); ++i) m.set(cliff_letter(src, i), cliff_gen(dst, i));
}
void set_ext(Morphism& m, const Algebra& src, const Algebra& dst) {
  if (!src.has_ext()) return;
  for (int i = 1; i <= src.n(); ++i) m.set(ext_letter(src, i), ext_gen(dst, i));
}
void set_simple_identity(Morphism& m, const Algebra& src, const Algebra& dst) {
  for (int i = 1; i < src.n(); ++i) m.set(simple_letter(src, i), simple_gen(dst, i));
}

// sum_{k<i} (1 - c_i c_k) s_ki, or sum_{k<i} [k,i] in spin algebras.
Element jm_tail(const Algebra& a, int i) {
  return a.group_kind() == GroupKind::Spin ? odd_jm(a, i) : jucys_murphy(a, i);
}

}  // namespace

std::string morphism_name(MorphismName m) { return info(m).text; }

MorphismName parse_morphism(const std::string& s) {
  for (const auto& i : kInfo)
    if (lower(i.text) == lower(s)) return i.name;
  throw std::invalid_argument("unknown morphism: " + s);
}

const std::vector<MorphismName>& all_morphisms() {
  static const std::vector<MorphismName> v = [] {
    std::vector<MorphismName> r;
    for (const auto& i : kInfo) r.push_back(i.name);
    return r;
  }();
  return v;
}

MorphismName inverse_of(MorphismName m) { return info(m).inverse; }

Morphism make_morphism(MorphismName name, int n, bool outer_tensor) {
  const bool rat_trig = name == MorphismName::Iota || name == MorphismName::J || name == MorphismName::IotaMinus ||
                        name == MorphismName::JMinus;
  if (outer_tensor && !rat_trig)
    throw std::invalid_argument(morphism_name(name) + " already has a tensor side");
  const std::string label = morphism_name(name) + (outer_tensor ? " (x) id" : "");
  switch (name) {
    case MorphismName::PhiFin: {
      const Algebra& s = alg(Kind::CliffordSym, n);
      const Algebra& t = alg(Kind::SpinSym, n, true);
      Morphism m(label, s, t);
      set_cliff(m, s, t);
      set_simple_to_spin(m, s, t);
      return m;
    }
    case MorphismName::PsiFin: {
      const Algebra& s = alg(Kind::SpinSym, n, true);
      const Algebra& t = alg(Kind::CliffordSym, n);
      Morphism m(label, s, t);
      for (int i = 1; i <= n; ++i) m.set(ext_letter(s, i), cliff_gen(t, i));
      set_spin_to_simple(m, s, t);
      return m;
    }
    case MorphismName::PhiHat: {
      const Algebra& s = alg(Kind::AffineHC, n);
      const Algebra& t = alg(Kind::SpinAffine, n, true);
      Morphism m(label, s, t);
      set_cliff(m, s, t);
      set_simple_to_spin(m, s, t);
      for (int i = 1; i <= n; ++i) m.set(left_letter(s, i), omega() * cliff_gen(t, i) * left_gen(t, i));
      return m;
    }
    case MorphismName::PsiHat: {
      const Algebra& s = alg(Kind::SpinAffine, n, true);
      const Algebra& t = alg(Kind::AffineHC, n);
      Morphism m(label, s, t);
      for (int i = 1; i <= n; ++i) m.set(ext_letter(s, i), cliff_gen(t, i));
      set_spin_to_simple(m, s, t);
      for (int i = 1; i <= n; ++i) m.set(left_letter(s, i), omega_inv() * cliff_gen(t, i) * left_gen(t, i));
      return m;
    }
    case MorphismName::Phi: {
      const Algebra& s = alg(Kind::DaHCa, n);
      const Algebra& t = alg(Kind::SDaHa, n, true);
      Morphism m(label, s, t);
      set_cliff(m, s, t);
      set_simple_to_spin(m, s, t);
      for (int i = 1; i <= n; ++i) {
        m.set(left_letter(s, i), omega() * cliff_gen(t, i) * left_gen(t, i));
        m.set(right_letter(s, i), right_gen(t, i));
      }
      return m;
    }
    case MorphismName::Psi: {
      const Algebra& s = alg(Kind::SDaHa, n, true);
      const Algebra& t = alg(Kind::DaHCa, n);
      Morphism m(label, s, t);
      for (int i = 1; i <= n; ++i) m.set(ext_letter(s, i), cliff_gen(t, i));
      set_spin_to_simple(m, s, t);
      for (int i = 1; i <= n; ++i) {
        m.set(left_letter(s, i), omega_inv() * cliff_gen(t, i) * left_gen(t, i));
        m.set(right_letter(s, i), right_gen(t, i));
      }
      return m;
    }
    case MorphismName::PhiTr: {
      const Algebra& s = alg(Kind::TrigDaHCa, n);
      const Algebra& t = alg(Kind::TrigSDaHa, n, true);
      Morphism m(label, s, t);
      set_cliff(m, s, t);
      set_simple_to_spin(m, s, t);
      for (int i = 1; i <= n; ++i) {
        m.set(left_letter(s, i), left_gen(t, i));
        m.set(left_letter(s, i, -1), left_gen(t, i, -1));
        m.set(right_letter(s, i), omega() * cliff_gen(t, i) * right_gen(t, i));
      }
      return m;
    }
    case MorphismName::PsiTr: {
      const Algebra& s = alg(Kind::TrigSDaHa, n, true);
      const Algebra& t = alg(Kind::TrigDaHCa, n);
      Morphism m(label, s, t);
      for (int i = 1; i <= n; ++i) m.set(ext_letter(s, i), cliff_gen(t, i));
      set_spin_to_simple(m, s, t);
      for (int i = 1; i <= n; ++i) {
        m.set(left_letter(s, i), left_gen(t, i));
        m.set(left_letter(s, i, -1), left_gen(t, i, -1));
        m.set(right_letter(s, i), omega_inv() * cliff_gen(t, i) * right_gen(t, i));
      }
      return m;
    }
    case MorphismName::Iota:
    case MorphismName::IotaMinus: {
      const bool spin = name == MorphismName::IotaMinus;
      const Algebra& s = alg(spin ? Kind::SDaHa : Kind::DaHCa, n, outer_tensor, true);
      const Algebra& t = alg(spin ? Kind::TrigSDaHa : Kind::TrigDaHCa, n, outer_tensor);
      Morphism m(label, s, t);
      set_ext(m, s, t);
      if (!spin) set_cliff(m, s, t);
      set_simple_identity(m, s, t);
      for (int i = 1; i <= n; ++i) {
        m.set(right_letter(s, i), left_gen(t, i));
        m.set(right_letter(s, i, -1), left_gen(t, i, -1));
        // x_i -> e^{-eps_i} (epsv_i - u sum_{k<i} ...)
        m.set(left_letter(s, i), left_gen(t, i, -1) * (right_gen(t, i) - t.u() * jm_tail(t, i)));
      }
      return m;
    }
    case MorphismName::J:
    case MorphismName::JMinus: {
      const bool spin = name == MorphismName::JMinus;
      const Algebra& s = alg(spin ? Kind::TrigSDaHa : Kind::TrigDaHCa, n, outer_tensor);
      const Algebra& t = alg(spin ? Kind::SDaHa : Kind::DaHCa, n, outer_tensor, true);
      Morphism m(label, s, t);
      set_ext(m, s, t);
      if (!spin) set_cliff(m, s, t);
      set_simple_identity(m, s, t);
      for (int i = 1; i <= n; ++i) {
        m.set(left_letter(s, i), right_gen(t, i));
        m.set(left_letter(s, i, -1), right_gen(t, i, -1));
        m.set(right_letter(s, i), right_gen(t, i) * left_gen(t, i) + t.u() * jm_tail(t, i));
      }
      return m;
    }
  }
  throw std::logic_error("unknown morphism");
}

Report check_distinguished_images(int n) {
  Report rep;
  const std::string N = " n=" + std::to_string(n);
  {
    Morphism phat = make_morphism(MorphismName::PhiHat, n);
    const Algebra& src = phat.source();
    const Algebra& t = phat.target();
    for (int i = 1; i < n; ++i) {
      Element want = -omega() * (cliff_gen(t, i) - cliff_gen(t, i + 1)) *
                     reinterpret(intertwiner_psi(Algebra::get(Kind::SpinAffine, n), i), t);
      rep.add_zero("PhiHat(phi_i) = -w (c_i - c_(i+1)) psi_i i=" + std::to_string(i) + N,
                   phat.apply(intertwiner_phi(src, i)) - want);
    }
    for (int i = 1; i <= n; ++i) {
      Element want = omega() * cliff_gen(t, i) * reinterpret(odd_jm(Algebra::get(Kind::SpinAffine, n), i), t);
      rep.add_zero("PhiHat(M_i) = w c_i M_i i=" + std::to_string(i) + N, phat.apply(jucys_murphy(src, i)) - want);
    }
  }
  {
    Morphism phi = make_morphism(MorphismName::Phi, n);
    const Algebra& src = phi.source();
    const Algebra& t = phi.target();
    const Algebra& sd = Algebra::get(Kind::SDaHa, n);
    for (int i = 1; i <= n; ++i) {
      std::string id = " i=" + std::to_string(i) + N;
      rep.add_zero("Phi(M_i) = w c_i M_i" + id,
                   phi.apply(jucys_murphy(src, i)) - omega() * cliff_gen(t, i) * reinterpret(odd_jm(sd, i), t));
      for (const Scalar& al : {Scalar(0), Scalar(1), Scalar::u()}) {
        Element want = omega() * cliff_gen(t, i) * reinterpret(spin_embedded_generator(sd, al, i), t);
        rep.add_zero("Phi(alpha x_i + z_i) = w c_i (alpha xi_i + fz_i) alpha=" + al.to_string() + id,
                     phi.apply(embedded_generator(src, al, i)) - want);
      }
      for (int k = 1; k <= n; ++k) {
        if (k == i) continue;
        Element arg = omega_inv() * (cliff_gen(src, i) - cliff_gen(src, k)) * transposition(src, i, k);
        rep.add_zero("Phi((1/w)(c_i - c_k) s_ik) = [k,i] i,k=" + std::to_string(i) + "," + std::to_string(k) + N,
                     phi.apply(arg) - odd_transposition(t, k, i));
      }
    }
  }
  return rep;
}

Report check_compatibility_square(int n) {
  Report rep;
  Morphism iota = make_morphism(MorphismName::Iota, n);
  Morphism phi = make_morphism(MorphismName::Phi, n);
  Morphism phitr = make_morphism(MorphismName::PhiTr, n);
  Morphism iotam = make_morphism(MorphismName::IotaMinus, n, true);
  const Algebra& rat = phi.source();
  for (const Letter& l : generators(rat)) {
    Element g = letter_element(rat, l);
    Element lhs = phitr.apply(iota.apply(reinterpret(g, iota.source())));
    Element rhs = iotam.apply(reinterpret(phi.apply(g), iotam.source()));
    rep.add_zero("PhiTr(Iota(" + letter_name(rat, l) + ")) = IotaMinus(Phi(" + letter_name(rat, l) + ")) n=" +
                     std::to_string(n),
                 lhs - rhs);
  }
  return rep;
}

Report verify_morphism(MorphismName name, int n) {
  Morphism f = make_morphism(name, n);
  Morphism g = make_morphism(inverse_of(name), n);
  Report rep;
  rep.append(check_homomorphism(f), f.name() + ": ");
  rep.append(check_inverse_pair(f, g), f.name() + "/" + g.name() + ": ");
  return rep;
}

}  // namespace spinhecke
