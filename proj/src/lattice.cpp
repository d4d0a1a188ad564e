#include "bpba/lattice.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "bpba/error.hpp"

namespace bpba {

namespace {

bool in_set(const Rational& x, std::initializer_list<Rational> values) {
    return std::any_of(values.begin(), values.end(), [&](const Rational& v) { return x == v; });
}

const Rational kHalf(1, 2);

} // namespace

ExternalConfig ExternalConfig::reference(std::size_t n) {
    return ExternalConfig{std::vector<int>(n, 1), std::vector<int>(n, 1)};
}

ValidationReport validate_structure(const LatticeSpec& spec) {
    ValidationReport report;
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };

    const std::size_t n = spec.n_lines();
    if (n == 0) {
        fail("lattice has no lines");
        return report;
    }
    if (spec.reflected.size() != n) {
        fail("reflected flags: expected " + std::to_string(n) + ", got " + std::to_string(spec.reflected.size()));
    }
    if (spec.rapidities.size() != n) {
        fail("rapidities: expected " + std::to_string(n) + ", got " + std::to_string(spec.rapidities.size()));
    }

    const int L = spec.chain_length();
    std::vector<int> seen(static_cast<std::size_t>(L) + 1, 0);
    for (std::size_t k = 0; k < n; ++k) {
        const auto& c = spec.chords[k];
        std::string tag = "line " + std::to_string(k + 1) + " (" + std::to_string(c.start) + "," +
                          std::to_string(c.end) + ")";
        if (c.start < 1 || c.start > L || c.end < 1 || c.end > L) {
            fail(tag + ": endpoint outside 1.." + std::to_string(L));
            continue;
        }
        if (c.start <= c.end) {
            fail(tag + ": start must exceed end");
        }
        ++seen[static_cast<std::size_t>(c.start)];
        ++seen[static_cast<std::size_t>(c.end)];
        if (k > 0 && spec.chords[k - 1].start <= c.start) {
            fail(tag + ": starts must be strictly descending (i_" + std::to_string(k) + " > i_" +
                 std::to_string(k + 1) + ")");
        }
    }
    for (int s = 1; s <= L; ++s) {
        if (seen[static_cast<std::size_t>(s)] == 0) {
            fail("perimeter point " + std::to_string(s) + " is not used");
        } else if (seen[static_cast<std::size_t>(s)] > 1) {
            fail("perimeter point " + std::to_string(s) + " is used " + std::to_string(seen[static_cast<std::size_t>(s)]) +
                 " times");
        }
    }
    return report;
}

ValidationReport validate_spec(const LatticeSpec& spec) {
    ValidationReport report = validate_structure(spec);
    if (spec.rapidities.size() != spec.n_lines()) {
        return report;
    }
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };

    const auto& th = spec.rapidities;
    const Rational& q = spec.q;
    for (std::size_t k = 0; k < th.size(); ++k) {
        std::string name = "theta_" + std::to_string(k + 1);
        if (in_set(th[k], {0, kHalf, -kHalf, 1, -1})) {
            fail("genericity: " + name + " = " + th[k].str() + " is in {0, ±1/2, ±1}");
        }
        for (const Rational& s : {q + th[k], q - th[k]}) {
            if (in_set(s, {0, 1, -1})) {
                fail("genericity: q ± " + name + " hits {0, ±1} (q = " + q.str() + ", " + name + " = " + th[k].str() +
                     ")");
                break;
            }
        }
        for (std::size_t l = k + 1; l < th.size(); ++l) {
            for (const Rational& s : {th[k] + th[l], th[k] - th[l]}) {
                if (in_set(s, {0, 1, -1, 2, -2})) {
                    fail("genericity: theta_" + std::to_string(k + 1) + " ± theta_" + std::to_string(l + 1) +
                         " hits {0, ±1, ±2}");
                    break;
                }
            }
        }
    }
    if (in_set(q, {0, kHalf, -kHalf})) {
        fail("genericity: q = " + q.str() + " is in {0, ±1/2}");
    }
    return report;
}

void require_valid(const LatticeSpec& spec) {
    auto report = validate_spec(spec);
    if (!report.ok) {
        throw InvalidSpec(report.violations.front());
    }
}

std::vector<SiteRole> site_roles(const LatticeSpec& spec) {
    std::vector<SiteRole> roles(static_cast<std::size_t>(spec.chain_length()));
    for (std::size_t k = 0; k < spec.n_lines(); ++k) {
        roles.at(static_cast<std::size_t>(spec.chords[k].start - 1)) = SiteRole{k, false};
        roles.at(static_cast<std::size_t>(spec.chords[k].end - 1)) = SiteRole{k, true};
    }
    return roles;
}

InhomogeneityAssignment inhomogeneities(const LatticeSpec& spec) {
    require_valid(spec);
    InhomogeneityAssignment out;
    out.v.resize(static_cast<std::size_t>(spec.chain_length()));
    for (std::size_t k = 0; k < spec.n_lines(); ++k) {
        const Rational& th = spec.rapidities[k];
        out.v[static_cast<std::size_t>(spec.chords[k].start - 1)] = th;
        out.v[static_cast<std::size_t>(spec.chords[k].end - 1)] = spec.reflected[k] ? -th - 1 : th - 1;
    }
    return out;
}

BetheRootSet canonical_bethe_roots(const LatticeSpec& spec) {
    require_valid(spec);
    BetheRootSet out;
    for (std::size_t k = 0; k < spec.n_lines(); ++k) {
        out.roots.push_back(spec.signed_rapidity(k));
    }
    return out;
}

Rational q_from_roots(const std::vector<Rational>& roots, const Rational& z) {
    Rational p(1);
    for (const auto& r : roots) {
        p *= (z - r) * (z + r + 1);
    }
    return p;
}

Rational q_function(const LatticeSpec& spec, const Rational& z) {
    Rational p(1);
    for (std::size_t k = 0; k < spec.n_lines(); ++k) {
        const Rational& th = spec.rapidities[k];
        if (spec.reflected[k]) {
            p *= (z - th) * (z + th + 1);
        } else {
            p *= (z + th) * (z - th + 1);
        }
    }
    return p;
}

void check_config(const LatticeSpec& spec, const ExternalConfig& config) {
    const std::size_t n = spec.n_lines();
    if (config.alpha.size() != n || config.beta.size() != n) {
        throw InvalidSpec("external configuration must have " + std::to_string(n) + " alpha and beta labels");
    }
    for (int s : config.alpha) {
        if (s != 1 && s != 2) {
            throw InvalidSpec("alpha labels must be 1 or 2");
        }
    }
    for (int s : config.beta) {
        if (s != 1 && s != 2) {
            throw InvalidSpec("beta labels must be 1 or 2");
        }
    }
}

std::vector<int> magnon_positions(const LatticeSpec& spec, const ExternalConfig& config) {
    check_config(spec, config);
    std::vector<int> x;
    for (std::size_t k = 0; k < spec.n_lines(); ++k) {
        if (config.alpha[k] == 2) {
            x.push_back(spec.chords[k].start);
        }
        if (config.beta[k] == 1) {
            x.push_back(spec.chords[k].end);
        }
    }
    std::sort(x.begin(), x.end());
    return x;
}

bool ice_rule_satisfied(const LatticeSpec& spec, const ExternalConfig& config) {
    check_config(spec, config);
    auto twos = std::count(config.alpha.begin(), config.alpha.end(), 2);
    auto ones = std::count(config.beta.begin(), config.beta.end(), 1);
    return static_cast<std::size_t>(twos + ones) == spec.n_lines();
}

LatticeSpec initial_spec(std::vector<bool> reflected, std::vector<Rational> rapidities, Rational q) {
    LatticeSpec spec;
    const int n = static_cast<int>(rapidities.size());
    for (int k = 1; k <= n; ++k) {
        spec.chords.push_back(Chord{2 * (n - k + 1), 2 * (n - k) + 1});
    }
    spec.reflected = std::move(reflected);
    spec.rapidities = std::move(rapidities);
    spec.q = std::move(q);
    return spec;
}

bool is_initial(const LatticeSpec& spec) {
    const int n = static_cast<int>(spec.n_lines());
    for (int k = 1; k <= n; ++k) {
        const auto& c = spec.chords[static_cast<std::size_t>(k - 1)];
        if (c.start != 2 * (n - k + 1) || c.end != 2 * (n - k) + 1) {
            return false;
        }
    }
    return true;
}

std::vector<ExternalConfig> all_configs(std::size_t n) {
    std::vector<ExternalConfig> out;
    const std::size_t total = std::size_t{1} << (2 * n);
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        ExternalConfig c;
        c.alpha.resize(n);
        c.beta.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            c.alpha[k] = 1 + static_cast<int>((code >> (2 * n - 1 - k)) & 1U);
            c.beta[k] = 1 + static_cast<int>((code >> (n - 1 - k)) & 1U);
        }
        out.push_back(std::move(c));
    }
    return out;
}

LatticeSpec figure1_spec(std::vector<Rational> rapidities, Rational q) {
    LatticeSpec spec;
    spec.chords = {{8, 3}, {7, 1}, {6, 5}, {4, 2}};
    spec.reflected = {false, true, true, true};
    spec.rapidities = std::move(rapidities);
    spec.q = std::move(q);
    return spec;
}

} // namespace bpba
