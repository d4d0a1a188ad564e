#pragma once

/**
 * @file cba.hpp
 * @brief Coordinate Bethe ansatz: explicit wave functions and Z_CBA.
 *
 * Components of the Bethe state are sums over permutations σ and
 * reflections τ (z → -z-1) of the roots. `wave_function` evaluates the sum
 * by a dynamic programme over root subsets for each τ, which produces the
 * same terms grouped differently; `wave_function_enumerated` visits every
 * (τ, σ) term separately.
 */

#include <string>
#include <vector>

#include "bpba/lattice.hpp"
#include "bpba/quantum.hpp"

namespace bpba {

struct WaveInput {
    InhomogeneityAssignment v;
    BetheRootSet z;
    std::vector<int> x; // strictly increasing magnon sites
    Rational q;
    int chain_length = 0;
};

/// Throws InvalidSpec unless x is strictly increasing in 1..L with |x| = m.
void check_wave_input(const WaveInput& w);

/// ∏_{k<l} (z_k-z_l+1)(z_k+z_l+2) / ((z_k-z_l)(z_k+z_l+1)).
Rational amplitude(const std::vector<Rational>& ordered_roots);

/// φ_x(z) = (-1)^L (q-z-1) ∏_j (z+v_j) ∏_{j<x} (z-v_j+1) ∏_{j>x} (z-v_j).
Rational wave_part(int x, const Rational& z, const WaveInput& w);

/// Υ(x). PoleError names the reflection pattern τ and the root pair.
Rational wave_function(const WaveInput& w);

/// Υ(x) summed term by term; PoleError names the offending (τ, σ).
Rational wave_function_enumerated(const WaveInput& w);

Rational wave_function(const LatticeSpec& spec, const BetheRootSet& roots, const std::vector<int>& x);

/// Φ = Σ_σ ∏_{k<l} (z_σk - z_σl + 1)/(z_σk - z_σl) ∏_i φ^cl_{x_i}(z_σi).
Rational closed_wave(const std::vector<Rational>& v, const std::vector<Rational>& z, const std::vector<int>& x);

/// Components of B(z_1)⋯B(z_m)Ω (closed chain) against Φ for every magnon set.
bool check_closed_wave(const LatticeSpec& spec, const BetheRootSet& roots);

/// [B(x),B(y)] = 0 and A(x)B(y) = h(y,x)B(y)A(x) - k(y,x)B(x)A(y). PoleError at x = y.
bool check_closed_fcr(const LatticeSpec& spec, const Rational& x, const Rational& y);

/// 𝓑(z) = (-1)^L 2z/(2z+1) Σ_τ (-1)^|τ| (q-z^τ-1) B(z^τ) A(-z^τ-1). PoleError at z = -1/2.
bool check_b_expansion(const LatticeSpec& spec, const Rational& z);

/// Open Bethe vector against its expansion in closed B-operators.
bool check_vecmitb(const LatticeSpec& spec, const BetheRootSet& roots);

/// Σ_{τ∈R₂} (-1)^|τ| (q-z_i^τ-1)(q-z_j^τ-1) / (z_i^τ + z_j^τ + 1).
Rational two_reflection_sum(const Rational& q, const Rational& zi, const Rational& zj);

/// 𝒩_{L,m} Σ_x Υ(x) S_G|x⟩, with |x⟩ the all-1 state flipped to 2 at x.
QuantumState cba_state(const LatticeSpec& spec, const BetheRootSet& roots);

/// Z = (-1)^{I(β)} Υ(x)/Υ(x₀); 0 when the ice rule fails.
Rational z_cba(const LatticeSpec& spec, const ExternalConfig& config);

std::vector<Rational> z_cba_all(const LatticeSpec& spec, const std::vector<ExternalConfig>& configs);

} // namespace bpba
