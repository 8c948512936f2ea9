#pragma once

// Distinguished elements of the spin tower: CS_n^-, the degenerate spin
// affine Hecke algebra, the rational and trigonometric sDaHa.

#include <vector>

#include "spinhecke/engine.hpp"

namespace spinhecke {

/// Odd JM element sum_{k<i} [k,i] in any algebra with a spin group part.
Element odd_jm(const Algebra& a, int i);

/// fz_i = u^{-1} y_i xi_i + M_i in SDaHa; std::domain_error at u = 0.
Element frak_z(const Algebra& a, int i);

/// alpha xi_i + fz_i.
Element spin_embedded_generator(const Algebra& a, const Scalar& alpha, int i);

/// psi_i = t_i (b_i^2 - b_{i+1}^2) - (b_i - b_{i+1}) in SpinAffine.
Element intertwiner_psi(const Algebra& a, int i);

/// b_i -> alpha xi_i + fz_i, t_i -> t_i into SDaHa.
Report spin_affine_embedding_check(int n, const Scalar& alpha);

/// b_i -> M_i, identity on CS_n^-.
Report spin_evaluation_hom_check(int n);

/// [fz_i, fz_j]_+ = 0, [xi_i, fz_j]_+ + [xi_j, fz_i]_+ = 0,
/// [alpha xi_i + fz_i, alpha xi_j + fz_j]_+ = 0,
/// (alpha xi_{i+1} + fz_{i+1}) t_i + t_i (alpha xi_i + fz_i) = 1.
Report spin_commuting_family_check(int n, const std::vector<Scalar>& alphas);

/// psi_i^2 closed form, braid, anticommutation at distance > 1, and the
/// psi_i b_j rules.
Report spin_intertwiner_check(int n);

/// Odd JM elements anticommute; M_1 = 0; M_2 = t_1; [i,j] relations.
Report odd_jm_check(int n);

/// xi_1^2 y_1 + xi_2^2 y_2 + u (xi_1 - xi_2) t_1 at n = 2. Central for every u;
/// the coefficient 2 form is its specialization at u = 2.
Element sdaha_center_example(const Algebra& a);

/// Closed form of [zeta_i, e^eta].
Element spin_trig_commutator(const Algebra& a, int i, const std::vector<int>& eta);

}  // namespace spinhecke
