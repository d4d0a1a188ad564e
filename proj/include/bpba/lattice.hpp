#pragma once

/**
 * @file lattice.hpp
 * @brief Problem instances: chord pairings, reflected lines, rapidities.
 *
 * Perimeter sites are numbered 1..L (L = 2N) as on the arc. Line indices are
 * 0-based in containers; line k of the text (k = 1..N) is chords[k-1].
 */

#include <cstddef>
#include <string>
#include <vector>

#include "bpba/rational.hpp"

namespace bpba {

/// One oriented line: it enters the half-disk at `start` and leaves at `end`.
struct Chord {
    int start = 0;
    int end = 0;

    friend bool operator==(const Chord&, const Chord&) = default;
};

struct LatticeSpec {
    std::vector<Chord> chords;       // ordered by strictly descending start
    std::vector<bool> reflected;     // reflected[k]: line k bounces off the diameter
    std::vector<Rational> rapidities;
    Rational q;

    std::size_t n_lines() const { return chords.size(); }
    int chain_length() const { return static_cast<int>(2 * chords.size()); }

    /// Rapidity carried at the boundary-adjacent end: +θ if reflected, -θ otherwise.
    Rational signed_rapidity(std::size_t k) const {
        return reflected[k] ? rapidities[k] : -rapidities[k];
    }

    friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

/// Perimeter state labels, each 1 or 2, one entry per line.
struct ExternalConfig {
    std::vector<int> alpha;
    std::vector<int> beta;

    /// α₀ = β₀ = (1, …, 1).
    static ExternalConfig reference(std::size_t n);

    friend bool operator==(const ExternalConfig&, const ExternalConfig&) = default;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Inhomogeneity per site; v[s-1] belongs to site s.
struct InhomogeneityAssignment {
    std::vector<Rational> v;

    const Rational& at(int site) const { return v.at(static_cast<std::size_t>(site - 1)); }
};

struct BetheRootSet {
    std::vector<Rational> roots;

    std::size_t magnon_count() const { return roots.size(); }
};

/// Which line owns a site and whether the site is that line's end point.
struct SiteRole {
    std::size_t line = 0;
    bool is_end = false;
};

/// Structural invariants (perfect matching, start > end, descending starts)
/// plus the genericity conditions on rapidities and q.
ValidationReport validate_spec(const LatticeSpec& spec);

/// Throws InvalidSpec carrying the first violation if `spec` is not valid.
void require_valid(const LatticeSpec& spec);

/// Only the structural part of validate_spec (no genericity).
ValidationReport validate_structure(const LatticeSpec& spec);

std::vector<SiteRole> site_roles(const LatticeSpec& spec);

/// v at start sites is θ_k; at end sites -θ_k-1 (reflected) or θ_k-1.
InhomogeneityAssignment inhomogeneities(const LatticeSpec& spec);

/// z_k = θ_k for reflected lines, -θ_k otherwise.
BetheRootSet canonical_bethe_roots(const LatticeSpec& spec);

/// Q(z) = ∏(z - z_i)(z + z_i + 1) over the given roots.
Rational q_from_roots(const std::vector<Rational>& roots, const Rational& z);

/// Baxter Q-function of the lattice, written directly in the rapidities.
Rational q_function(const LatticeSpec& spec, const Rational& z);

/// Sorted magnon sites {i_k | α_k = 2} ∪ {j_k | β_k = 1}.
std::vector<int> magnon_positions(const LatticeSpec& spec, const ExternalConfig& config);

bool ice_rule_satisfied(const LatticeSpec& spec, const ExternalConfig& config);

/// Throws ParseError/InvalidSpec if sizes or labels are off.
void check_config(const LatticeSpec& spec, const ExternalConfig& config);

/// Initial pairing ((2N,2N-1), …, (2,1)) with the given line data.
LatticeSpec initial_spec(std::vector<bool> reflected, std::vector<Rational> rapidities, Rational q);

bool is_initial(const LatticeSpec& spec);

/// All 4^N configurations, α-major in lexicographic order (1 < 2).
std::vector<ExternalConfig> all_configs(std::size_t n);

/// The N = 4 lattice with G = ((8,3),(7,1),(6,5),(4,2)), B = {2,3,4}.
LatticeSpec figure1_spec(std::vector<Rational> rapidities, Rational q);

} // namespace bpba
