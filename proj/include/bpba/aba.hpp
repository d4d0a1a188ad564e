#pragma once

/**
 * @file aba.hpp
 * @brief Algebraic Bethe ansatz for the reflecting-boundary invariants.
 *
 * Bethe states are built as 𝓑(z_1)⋯𝓑(z_m)|Ω⟩ with the double-row
 * creation operator. With the canonical roots the state is the lattice
 * invariant, and partition functions are ratios of its components.
 */

#include <vector>

#include "bpba/lattice.hpp"
#include "bpba/monodromy.hpp"

namespace bpba {

struct AbaResult {
    QuantumState bethe_state;
    BetheRootSet roots;
    Rational normalization_component; // ⟨α₀,β₀|ψ⟩
};

/// ψ_m = 𝓑(z_1)⋯𝓑(z_m)|Ω⟩. Throws DegenerateError if the state vanishes.
QuantumState bethe_state(const LatticeSpec& spec, const BetheRootSet& roots);

/// Bethe state with the canonical roots plus its normalisation component.
AbaResult aba_solve(const LatticeSpec& spec);

/// Component ⟨α,β|ψ⟩: α_k at site i_k, β_k at site j_k.
Rational contract(const LatticeSpec& spec, const QuantumState& state, const ExternalConfig& config);

/// Z = ⟨α,β|ψ_N⟩ / ⟨α₀,β₀|ψ_N⟩; 0 when the ice rule fails.
Rational z_aba(const LatticeSpec& spec, const ExternalConfig& config);

/// Z for every configuration in `configs` from one Bethe state.
std::vector<Rational> z_aba_all(const LatticeSpec& spec, const std::vector<ExternalConfig>& configs);

/// Outcome of the four block conditions of U(z)|Ψ⟩ = Λ(z)𝒦(z)|Ψ⟩.
struct InvarianceReport {
    bool b_annihilates = false;
    bool c_annihilates = false;
    bool a_eigen = false; // A|Ψ⟩ = Λ(z)(q+z)|Ψ⟩
    bool d_eigen = false; // D|Ψ⟩ = Λ(z)(q-z)|Ψ⟩

    bool ok() const { return b_annihilates && c_annihilates && a_eigen && d_eigen; }
};

InvarianceReport invariance_report(const LatticeSpec& spec, const QuantumState& state, const Rational& z);
bool check_invariance(const LatticeSpec& spec, const QuantumState& state, const Rational& z);

/// Ξ(z)Q(z-1)/Q(z) = Λ(z) and Ξ(z-1)Q(z+1)/Q(z) = Λ(z). PoleError if Q(z) = 0.
bool check_baxter(const LatticeSpec& spec, const Rational& z);

/// Λ(z+1)/Ξ(z+1) = Ξ(z-1)/Λ(z).
bool check_lambda_xi_identity(const LatticeSpec& spec, const Rational& z);

/// Coefficient functions of the open-chain exchange relations.
struct OpenFcrCoefficients {
    Rational h_a, g_a, g_dt, h_dt, k_a, k_dt;
};
OpenFcrCoefficients open_fcr_coefficients(const Rational& x, const Rational& y);

struct UnwantedTerms {
    Rational m_k;
    Rational n_k;
};

/// Closed (Q-function) forms of M_k, N_k at the given roots; k is 1-based.
UnwantedTerms unwanted_terms(const LatticeSpec& spec, const BetheRootSet& roots, const Rational& z, std::size_t k);

/// The same quantities from the exchange-relation coefficients (first-line forms).
UnwantedTerms unwanted_terms_expanded(const LatticeSpec& spec, const BetheRootSet& roots, const Rational& z,
                                      std::size_t k);

/// Canonical roots.
UnwantedTerms unwanted_terms(const LatticeSpec& spec, const Rational& z, std::size_t k);

/// A(z)ψ and D̃(z)ψ reproduce the wanted plus unwanted terms, as state identities.
bool check_off_shell_action(const LatticeSpec& spec, const BetheRootSet& roots, const Rational& z);

/// [𝓑,𝓑] = 0 and the A·𝓑, D̃·𝓑 exchange relations as dense operator identities.
bool check_fcr_open(const LatticeSpec& spec, const Rational& x, const Rational& y);

/// 𝓑(z) = -z/(z+1)·𝓑(-z-1). PoleError at z ∈ {0, -1}.
bool check_b_reflection(const LatticeSpec& spec, const Rational& z);

/// Length-reduction identity for a spec whose line 1 is the chord (2N, 2N-1):
/// with z_1 the canonical root of line 1 and the remaining roots arbitrary,
/// ψ_{2N,m} = ψ_{2N-2,m-1} ⊗ h(±θ_1)Ψ_{∧/∩}, and components with differing
/// labels at sites 2N-1, 2N vanish.
bool check_reduction(const LatticeSpec& spec, const std::vector<Rational>& other_roots);

/// The h-factor of the reduction identity.
Rational reduction_factor(const Rational& theta, const Rational& q, const std::vector<Rational>& other_roots,
                          const InhomogeneityAssignment& lower_v);

} // namespace bpba
