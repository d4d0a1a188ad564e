#pragma once

/**
 * @file monodromy.hpp
 * @brief Lax operators, single- and double-row monodromies, reference state.
 *
 * Monodromies are kept as ordered factor lists and applied matrix-free:
 * each Lax factor touches one site and the auxiliary space, so applying a
 * full monodromy to a chain vector costs O(L·2^L). Dense AuxOperator forms
 * are available for identity checks on short chains.
 *
 * Sites that carry a line end point use the conjugate Lax operator; this is
 * the S-conjugation by S_G = ∏ S_{j_k} written out factor by factor.
 */

#include <variant>
#include <vector>

#include "bpba/lattice.hpp"
#include "bpba/quantum.hpp"

namespace bpba {

struct LaxFactor {
    int site = 1;
    Rational arg;
    bool conjugate = false;
};

/// diag(first, second) acting on the auxiliary space only.
struct AuxDiagonal {
    Rational first;
    Rational second;
};

/// Ordered product of auxiliary-space factors; the last factor acts first.
class Monodromy {
public:
    using Factor = std::variant<LaxFactor, AuxDiagonal>;

    explicit Monodromy(int chain_length) : chain_length_(chain_length) {}

    int chain_length() const { return chain_length_; }
    const std::vector<Factor>& factors() const { return factors_; }

    Monodromy& lax(int site, Rational arg, bool conjugate);
    Monodromy& diagonal(Rational first, Rational second);
    /// Appends all factors of `other` to the right.
    Monodromy& append(const Monodromy& other);

    AuxState apply(AuxState state) const;
    /// Block (r,c) applied to a chain vector: row r of M·(e_c ⊗ v).
    ExactVector apply_block(int r, int c, const ExactVector& v) const;
    /// Both rows of column c at once.
    AuxState apply_column(int c, const ExactVector& v) const;
    AuxOperator materialize() const;

private:
    int chain_length_;
    std::vector<Factor> factors_;
};

/// Applies one Lax factor to an auxiliary vector in place.
void apply_lax(AuxState& state, int chain_length, const LaxFactor& factor);

/// Single Lax operator on an L-site chain. Plain: block(r,c) = z·δ_rc + e_cr at `site`;
/// conjugate: block(r,c) = (z+1)·δ_rc - e_rc.
AuxOperator lax_embed(const Rational& z, int site, int chain_length, bool conjugate);

/// M(z) = L_1(z-v_1)⋯L_L(z-v_L), or M̂(z) = L_L(z+v_L)⋯L_1(z+v_1) for `hat`.
Monodromy single_row_monodromy(const LatticeSpec& spec, const Rational& z, bool hat);
AuxOperator single_row(const LatticeSpec& spec, const Rational& z, bool hat);

/// U(z) = M(z)·𝒦(z)·M̂(z), 𝒦(z) = diag(q+z, q-z).
Monodromy double_row_monodromy(const LatticeSpec& spec, const Rational& z);
AuxOperator double_row(const LatticeSpec& spec, const Rational& z);

/// The four generators of U(z) (and D̃) as matrix-free maps on chain vectors.
class DoubleRow {
public:
    DoubleRow(const LatticeSpec& spec, Rational z);

    const Rational& z() const { return z_; }
    const Monodromy& monodromy() const { return mono_; }

    ExactVector A(const ExactVector& v) const { return mono_.apply_block(1, 1, v); }
    ExactVector B(const ExactVector& v) const { return mono_.apply_block(1, 2, v); }
    ExactVector C(const ExactVector& v) const { return mono_.apply_block(2, 1, v); }
    ExactVector D(const ExactVector& v) const { return mono_.apply_block(2, 2, v); }
    /// D̃ = D - A/(2z+1). PoleError at z = -1/2.
    ExactVector D_tilde(const ExactVector& v) const;

private:
    Rational z_;
    Monodromy mono_;
};

/// Dense D̃(z). PoleError at z = -1/2.
QuantumOperator d_tilde(const LatticeSpec& spec, const Rational& z);

/// Ω = S_G |1…1⟩: state 2 with sign -1 at every end site.
QuantumState reference_state(const LatticeSpec& spec);

struct VacuumEigenvalues {
    Rational alpha_val;
    Rational delta_tilde_val;
    Rational xi_val;
    Rational lambda_val;
};

/// f(z,θ) = (z-θ-1)(z-θ+1)(z+θ)(z+θ+2)
Rational line_factor_f(const Rational& z, const Rational& theta);
/// g(z,θ) = (z-θ)(z-θ+1)(z+θ+1)(z+θ+2)
Rational line_factor_g(const Rational& z, const Rational& theta);

Rational xi(const LatticeSpec& spec, const Rational& z);
Rational lambda(const LatticeSpec& spec, const Rational& z);

/// α(z) = (q+z)Ξ(z); δ̃(z) = 2z/(2z+1)·(q-z-1)·Ξ(z-1). PoleError at z = -1/2.
VacuumEigenvalues vacuum_eigenvalues(const LatticeSpec& spec, const Rational& z);

/// M̂^{t_a}(z) = (-1)^L · S M(-z-1) S⁻¹ with S in the auxiliary space.
bool check_crossing(const LatticeSpec& spec, const Rational& z);

/// Same comparison with an explicit scalar in place of (-1)^L.
bool check_crossing_with_prefactor(const LatticeSpec& spec, const Rational& z, const Rational& prefactor);

/// Boundary Yang-Baxter relation for U on aux ⊗ aux ⊗ chain (dense; short chains only).
bool check_double_row_bybe(const LatticeSpec& spec, const Rational& x, const Rational& y);

} // namespace bpba
