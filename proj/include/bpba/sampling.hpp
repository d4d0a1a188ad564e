#pragma once

/**
 * @file sampling.hpp
 * @brief Seeded random draws of rationals and generic lattice specs.
 */

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "bpba/lattice.hpp"

namespace bpba {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

    bool coin() { return integer(0, 1) == 1; }

    /// p/q with |p| ≤ num_bound and 1 ≤ q ≤ den_bound.
    Rational rational(int num_bound = 40, int den_bound = 13) {
        return Rational(integer(-num_bound, num_bound), integer(1, den_bound));
    }

    /// Random perfect matching of 1..2n, each chord oriented start > end, sorted by descending start.
    std::vector<Chord> pairing(std::size_t n) {
        std::vector<int> sites(2 * n);
        for (std::size_t i = 0; i < sites.size(); ++i) {
            sites[i] = static_cast<int>(i + 1);
        }
        std::shuffle(sites.begin(), sites.end(), engine_);
        std::vector<Chord> chords;
        for (std::size_t k = 0; k < n; ++k) {
            const int a = sites[2 * k];
            const int b = sites[2 * k + 1];
            chords.push_back(Chord{std::max(a, b), std::min(a, b)});
        }
        std::sort(chords.begin(), chords.end(), [](const Chord& x, const Chord& y) { return x.start > y.start; });
        return chords;
    }

    /// Generic line data on the given chords; redraws until validate_spec passes.
    LatticeSpec spec_on(std::vector<Chord> chords, std::vector<bool> reflected) {
        for (;;) {
            LatticeSpec s{chords, reflected, {}, rational()};
            for (std::size_t k = 0; k < chords.size(); ++k) {
                s.rapidities.push_back(rational());
            }
            if (validate_spec(s).ok) {
                return s;
            }
        }
    }

    LatticeSpec spec_on(std::vector<Chord> chords) {
        std::vector<bool> reflected(chords.size());
        for (std::size_t k = 0; k < chords.size(); ++k) {
            reflected[k] = coin();
        }
        return spec_on(std::move(chords), std::move(reflected));
    }

    LatticeSpec spec(std::size_t n) { return spec_on(pairing(n)); }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

} // namespace bpba
