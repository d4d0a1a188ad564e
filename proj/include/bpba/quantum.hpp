#pragma once

/**
 * @file quantum.hpp
 * @brief States and operators on the 2^L-dimensional chain space.
 *
 * A product state (s_1, …, s_L), s_i ∈ {1,2}, has basis index
 * Σ (s_i - 1)·2^(L-i): site 1 is the most significant bit. All local
 * operators below act in place of a dense matrix and touch each amplitude once.
 */

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "bpba/matrix.hpp"

namespace bpba {

struct QuantumState {
    int chain_length = 0;
    ExactVector vector;

    QuantumState() : vector(1) {}
    explicit QuantumState(int length);
    QuantumState(int length, ExactVector v);

    std::size_t dim() const { return vector.dim(); }
    const Rational& operator[](std::size_t i) const { return vector[i]; }
    Rational& operator[](std::size_t i) { return vector[i]; }

    /// Product basis state with the given site labels (1 or 2).
    static QuantumState product(const std::vector<int>& labels);

    friend bool operator==(const QuantumState&, const QuantumState&) = default;
};

std::size_t basis_index(const std::vector<int>& labels);
std::vector<int> basis_labels(std::size_t index, int length);
/// "s1s2…sL" label string, e.g. "1212".
std::string basis_string(std::size_t index, int length);

/// Label (1 or 2) at `site` of basis vector `index`.
inline int site_label(std::size_t index, int length, int site) {
    return 1 + static_cast<int>((index >> (length - site)) & 1U);
}

/// e_{ab} at `site`: |b⟩ ↦ |a⟩, other labels annihilated.
ExactVector apply_elementary(const ExactVector& v, int length, int site, int a, int b);

/// S = [[0,1],[-1,0]] (or S⁻¹ = -S) at `site`. S|1⟩ = -|2⟩, S|2⟩ = |1⟩.
ExactVector apply_s(const ExactVector& v, int length, int site, bool inverse = false);

/// Permutation of the labels at sites p and p+1.
ExactVector swap_adjacent(const ExactVector& v, int length, int p);

/// Permutation of the labels at two arbitrary sites.
ExactVector swap_sites(const ExactVector& v, int length, int s1, int s2);

/// (x + ℙ) on sites p, p+1: the unnormalised R-matrix (x+1)·R(x).
ExactVector apply_r_unnormalized(const ExactVector& v, int length, int p, const Rational& x);

/// Dense operator on the chain.
struct QuantumOperator {
    int chain_length = 0;
    ExactMatrix matrix;

    QuantumOperator() = default;
    QuantumOperator(int length, ExactMatrix m);
    static QuantumOperator zero(int length);
    static QuantumOperator identity(int length);

    ExactVector operator()(const ExactVector& v) const { return matrix * v; }
    friend bool operator==(const QuantumOperator&, const QuantumOperator&) = default;
};

/// Two-component vector in the auxiliary space: component r is a chain vector.
using AuxState = std::array<ExactVector, 2>;

/// 2×2 array of chain operators; block(1,1)=A, (1,2)=B, (2,1)=C, (2,2)=D.
struct AuxOperator {
    int chain_length = 0;
    std::array<QuantumOperator, 4> blocks;

    const QuantumOperator& block(int r, int c) const { return blocks[static_cast<std::size_t>(2 * (r - 1) + (c - 1))]; }
    QuantumOperator& block(int r, int c) { return blocks[static_cast<std::size_t>(2 * (r - 1) + (c - 1))]; }

    /// Product in the auxiliary space, operator products inside each entry.
    friend AuxOperator operator*(const AuxOperator& x, const AuxOperator& y);
    friend bool operator==(const AuxOperator&, const AuxOperator&) = default;

    /// Full 2^(L+1) matrix with the auxiliary index most significant.
    ExactMatrix full() const;
};

} // namespace bpba
