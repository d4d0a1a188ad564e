#pragma once

/**
 * @file verify.hpp
 * @brief Randomised identity suites behind `bpba verify`.
 *
 * Draw i of a suite uses its own generator seeded from (seed, i), so any
 * failure is reproducible from the reported seed and draw index alone.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "bpba/lattice.hpp"

namespace bpba {

struct SuiteResult {
    std::string name;
    std::size_t draws = 0;
    std::size_t checks = 0;
    std::size_t redraws = 0;           // draws that hit a pole and were replaced
    std::vector<std::string> failures; // "draw i: check [params]"

    bool ok() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();

/// Throws InvalidSpec for an unknown suite name.
SuiteResult run_suite(const std::string& name, std::size_t draws, std::uint64_t seed);

/// `name` may be "all".
std::vector<SuiteResult> run_suites(const std::string& name, std::size_t draws, std::uint64_t seed);

/// Figure 1 lattice with the bundled line data.
LatticeSpec figure1_fixture();

/// Initial condition G = ((8,7),(6,5),(4,3),(2,1)), B = {2,3,4}.
LatticeSpec init8_fixture();

} // namespace bpba
