#pragma once

// The isomorphisms between the Clifford and spin towers and the maps
// between rational and trigonometric algebras.

#include <string>
#include <vector>

#include "spinhecke/homomorphism.hpp"

namespace spinhecke {

enum class MorphismName {
  PhiFin, PsiFin,    // C_n x| CS_n <-> C_n (x) CS_n^-
  PhiHat, PsiHat,    // affine Hecke-Clifford <-> C_n (x) spin affine
  Phi, Psi,          // DaHCa <-> C_n (x) SDaHa
  PhiTr, PsiTr,      // trig DaHCa <-> C_n (x) trig SDaHa
  Iota, J,           // DaHCa[y^-1] <-> trig DaHCa
  IotaMinus, JMinus, // SDaHa[y^-1] <-> trig SDaHa
};

std::string morphism_name(MorphismName m);
/// Case-insensitive; throws std::invalid_argument.
MorphismName parse_morphism(const std::string& s);
const std::vector<MorphismName>& all_morphisms();
/// The partner of each map (Phi <-> Psi, Iota <-> J, ...).
MorphismName inverse_of(MorphismName m);

/// Source and target specs; tensor = true adds an outer C_n factor on
/// both sides (identity on it), used to compose with the tensor targets.
Morphism make_morphism(MorphismName name, int n, bool outer_tensor = false);

/// Phi-hat(phi_i) = -w (c_i - c_{i+1}) psi_i, Phi(M_i) = w c_i M_i,
/// Phi(alpha x_i + z_i) = w c_i (alpha xi_i + fz_i),
/// Phi((1/w)(c_i - c_k) s_ik) = [k,i].
Report check_distinguished_images(int n);

/// Phi^tr o iota = (iota^- on C_n (x) SDaHa) o Phi on the generators of
/// DaHCa.
Report check_compatibility_square(int n);

/// The full morphism suite at rank n: homomorphism property for every
/// map and the inverse identities for every pair.
Report verify_morphism(MorphismName name, int n);

}  // namespace spinhecke
