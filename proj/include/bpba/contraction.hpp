#pragma once

/**
 * @file contraction.hpp
 * @brief Direct construction of the lattice invariant.
 *
 * The invariant of the initial pairing ((2N,2N-1), …, (2,1)) is a tensor
 * product of two-site line and boundary-line invariants. Any other pairing
 * is reached by adjacent endpoint swaps; each swap applies an R-matrix at
 * the two sites (S-conjugated where a site holds a line end point) and then
 * exchanges the sites. Inhomogeneities and end-point roles travel with the
 * endpoints.
 */

#include <vector>

#include "bpba/lattice.hpp"
#include "bpba/quantum.hpp"

namespace bpba {

/// Adjacent swap of sites p and p+1, applying (arg + ℙ) before the exchange.
struct Move {
    int p = 1;
    Rational arg;

    friend bool operator==(const Move&, const Move&) = default;
};

struct MoveSequence {
    std::vector<Move> moves;
    LatticeSpec source; // initial pairing carrying the same B, Θ, q
    LatticeSpec target;
};

enum class PlanOrder {
    /// Reverse of the outward reduction: the top line's end point is moved
    /// up next to its start, then the remaining lines are handled recursively.
    kReduction,
    /// Adjacent bubble sort from the initial arrangement, lowest inversion first.
    kBubble,
};

/// Ψ_∩ = (1, 0, 0, 1).
QuantumState line_invariant();

/// Ψ_∧(θ) = K_1(θ)Ψ_∩ = (1, 0, 0, (q-θ)/(q+θ)). PoleError at q + θ = 0.
QuantumState boundary_line_invariant(const Rational& theta, const Rational& q);

/// Tensor product of the two-site invariants; line k sits on (2(N-k)+1, 2(N-k+1)).
QuantumState initial_invariant(const LatticeSpec& spec);

MoveSequence plan_moves(const LatticeSpec& spec, PlanOrder order = PlanOrder::kReduction);

/// Chords obtained by replaying the swaps on the source pairing.
std::vector<Chord> replay_pairing(const MoveSequence& plan);

/// Invariant of `spec`, up to an overall scalar.
QuantumState build_invariant(const LatticeSpec& spec, PlanOrder order = PlanOrder::kReduction);

/// Applies an explicit plan (its source must be an initial pairing).
QuantumState build_invariant(const MoveSequence& plan);

/// Z = ⟨α,β|Ψ⟩ / ⟨α₀,β₀|Ψ⟩; 0 when the ice rule fails.
Rational z_direct(const LatticeSpec& spec, const ExternalConfig& config);

std::vector<Rational> z_direct_all(const LatticeSpec& spec, const std::vector<ExternalConfig>& configs,
                                   PlanOrder order = PlanOrder::kReduction);

/// Half-products of the one-line monodromy acting on Ψ_∩:
/// L_2(z+θ)L̄_1(z+θ-1)Ψ_∩ = (z+θ-1)(z+θ+1)Ψ_∩ and L̄_1(z-θ+1)L_2(z-θ)Ψ_∩ = (z-θ)(z-θ+2)Ψ_∩.
bool check_line_eigen_relations(const Rational& z, const Rational& theta);

/// L_2(z-θ)𝒦_a(z)L_2(z+θ)Ψ_∧ = K_2(θ)L_2(z+θ)𝒦_a(z)L_2(z-θ)Ψ_∩, with K acting on site 2.
bool check_boundary_line_relation(const Rational& z, const Rational& theta, const Rational& q);

} // namespace bpba
