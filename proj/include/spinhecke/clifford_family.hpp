#pragma once

// Distinguished elements of the Clifford (non-spin) tower:
// C_n x| CS_n, the affine Hecke-Clifford algebra, the rational and the
// trigonometric double affine Hecke-Clifford algebras.

#include <vector>

#include "spinhecke/engine.hpp"

namespace spinhecke {

/// M_i = sum_{k<i} (1 - c_i c_k) s_{ki}. Any algebra with a plain group and
/// inner Clifford generators.
Element jucys_murphy(const Algebra& a, int i);

/// z_i = u^{-1} y_i x_i + M_i in DaHCa; throws std::domain_error when u = 0.
Element z_element(const Algebra& a, int i);

/// alpha x_i + z_i.
Element embedded_generator(const Algebra& a, const Scalar& alpha, int i);

/// phi_i = s_i (a_i^2 - a_{i+1}^2) + (a_i + a_{i+1}) + c_i c_{i+1} (a_i - a_{i+1}).
Element intertwiner_phi(const Algebra& a, int i);

/// a_i -> alpha x_i + z_i, c_i -> c_i, s_i -> s_i: every affine
/// Hecke-Clifford relation must hold in DaHCa.
Report affine_embedding_check(int n, const Scalar& alpha);

/// a_i -> M_i, identity on C_n x| CS_n.
Report evaluation_hom_check(int n);

/// Lemmas on z_i: [z_i, z_j], [x_i, z_j] - [x_j, z_i],
/// [alpha x_i + z_i, alpha x_j + z_j], c_i z_i = -z_i c_i, c_j z_i = z_i c_j,
/// (alpha x_{i+1} + z_{i+1}) s_i - s_i (alpha x_i + z_i) = 1 - c_{i+1} c_i.
Report commuting_family_check(int n, const std::vector<Scalar>& alphas);

/// [y_1, z_2] - [y_2, z_1] at n = 2 (nonzero).
Element z_asymmetry_witness();

/// phi_i^2 closed form, braid relations, far commutation.
Report intertwiner_check(int n);

/// JM elements commute pairwise, M_1 = 0, c_i M_i = -M_i c_i.
Report jucys_murphy_check(int n);

/// Even and commuting with every generator. One result per generator plus
/// a parity entry.
Report center_check(const Element& candidate);

/// Power sums y_1^k + ... + y_n^k and x_1^{2k} + ... + x_n^{2k}.
Element power_sum_y(const Algebra& a, int k);
Element power_sum_left_squares(const Algebra& a, int k);

/// x_1^2 y_1 + x_2^2 y_2 - u ((x_1 + x_2) s_12 + c_1 (x_1 + x_2) s_12 c_1) at
/// n = 2. Central for every u; at u = 1 it is the familiar form without u.
Element dahca_center_example(const Algebra& a);

/// Closed form of [epsv_i, e^eta] by telescoping.
Element trig_commutator(const Algebra& a, int i, const std::vector<int>& eta);
/// e^eta as an element.
Element trig_exponential(const Algebra& a, const std::vector<int>& eta);

/// Leibniz check: engine bracket [epsv_i, e^eta] equals the closed form on
/// random weights with entries in [-height, height].
Report trig_leibniz_check(const Algebra& a, int trials, int height, std::uint64_t seed);

/// The affine Hecke-Clifford relations on u^{-1} epsv_i, c_i, s_i inside
/// the trigonometric DaHCa.
Report trig_affine_subalgebra_check(int n);

}  // namespace spinhecke
