#pragma once

/**
 * @file weights.hpp
 * @brief Local Boltzmann weights and exact checkers for the local identities.
 *
 * Two-leg matrices use index 2·(s₁-1)+(s₂-1) for the state (s₁,s₂): the
 * first tensor factor is the most significant digit. For the Lax operator
 * the first leg is the auxiliary space and the second the chain site.
 */

#include "bpba/matrix.hpp"

namespace bpba {

struct RMatrix {
    Rational theta;
    ExactMatrix matrix; // 4×4
};

struct KMatrix {
    Rational theta;
    Rational q;
    ExactMatrix matrix; // 2×2
};

/// Normalised rational six-vertex R-matrix (θ + ℙ)/(θ + 1). PoleError at θ = -1.
RMatrix r_matrix(const Rational& theta);

/// Diagonal reflection matrix diag(1, (q-θ)/(q+θ)). PoleError at q + θ = 0.
KMatrix k_matrix(const Rational& theta, const Rational& q);

/// S = [[0,1],[-1,0]].
ExactMatrix s_matrix();
ExactMatrix s_matrix_inverse();

/// 4×4 permutation ℙ.
ExactMatrix permutation_matrix();

/// Singlet Y = (0, 1, -1, 0).
ExactVector singlet();

/// Antisymmetriser 𝔸 = (I - ℙ)/2.
ExactMatrix antisymmetrizer();

/// Unnormalised Lax operator z + Σ e_ab ⊗ e_ba on aux ⊗ site.
ExactMatrix lax_matrix(const Rational& z);

/// Conjugate Lax operator z + 1 - Σ e_ab ⊗ e_ab on aux ⊗ site.
ExactMatrix conjugate_lax_matrix(const Rational& z);

/// Embeds a 4×4 two-leg matrix into three legs at (first, second) ∈ {1,2,3}.
ExactMatrix embed_two_leg(const ExactMatrix& m, int first, int second);

/// Transposes one leg of a two-leg 4×4 matrix (leg 1 or 2).
ExactMatrix partial_transpose(const ExactMatrix& m, int leg);

bool check_ybe(const Rational& t1, const Rational& t2, const Rational& t3);

/// check_ybe for all 8 sign patterns (±t1, ±t2, ±t3).
bool check_ybe_sign_flips(const Rational& t1, const Rational& t2, const Rational& t3);

bool check_bybe(const Rational& t1, const Rational& t2, const Rational& q);

/// L(z)L(-z) = (1 - z²)·I for both Lax operators.
bool check_unitarity(const Rational& z);

/// Site-leg transpose of L(z) equals -L̄(-z-1).
bool check_transpose(const Rational& z);

/// Both orderings of (L_a(z) L_b(z-1)) Y_ab = (z+1)(z-1) I ⊗ Y_ab.
bool check_bootstrap(const Rational& z);

/// L(0) = ℙ and L(-1) = -2𝔸 = -Y·Yᵗ; also 𝔸 is a projector.
bool check_special_points();

/// S on the site leg maps L(z) to L̄(z).
bool check_s_conjugation(const Rational& z);

} // namespace bpba
