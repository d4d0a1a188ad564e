#include "bpba/cba.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "bpba/error.hpp"
#include "bpba/monodromy.hpp"
#include "bpba/aba.hpp"
#include "bpba/parallel.hpp"

namespace bpba {

namespace {

std::string tau_string(std::size_t tau, std::size_t m) {
    std::string s = "tau=(";
    for (std::size_t i = 0; i < m; ++i) {
        s += (i ? "," : "");
        s += ((tau >> i) & 1U) ? "1" : "0";
    }
    return s + ")";
}

std::vector<Rational> reflect(const std::vector<Rational>& z, std::size_t tau) {
    std::vector<Rational> out = z;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if ((tau >> i) & 1U) {
            out[i] = -z[i] - 1;
        }
    }
    return out;
}

Rational tau_sign(std::size_t tau) { return sign_power(std::popcount(tau)); }

WaveInput make_input(const LatticeSpec& spec, const BetheRootSet& roots, std::vector<int> x) {
    WaveInput w{inhomogeneities(spec), roots, std::move(x), spec.q, spec.chain_length()};
    check_wave_input(w);
    return w;
}

// Index and sign of S_G|x⟩, which is a single basis vector up to sign.
std::pair<std::size_t, Rational> rotated_basis(const std::vector<SiteRole>& roles, const std::vector<int>& x) {
    const int L = static_cast<int>(roles.size());
    std::size_t index = 0;
    for (int s : x) {
        index |= std::size_t{1} << (L - s);
    }
    Rational sign(1);
    for (int s = 1; s <= L; ++s) {
        if (roles[static_cast<std::size_t>(s - 1)].is_end) {
            const std::size_t bit = std::size_t{1} << (L - s);
            if ((index & bit) == 0) {
                sign = -sign; // S|1⟩ = -|2⟩
            }
            index ^= bit;
        }
    }
    return {index, sign};
}

std::vector<std::vector<int>> subsets(int L, std::size_t m) {
    std::vector<std::vector<int>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << L); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != m) {
            continue;
        }
        std::vector<int> x;
        for (int s = 1; s <= L; ++s) {
            if ((mask >> (s - 1)) & 1U) {
                x.push_back(s);
            }
        }
        out.push_back(std::move(x));
    }
    return out;
}

Rational kappa(const Rational& z, const InhomogeneityAssignment& v) {
    Rational p(1);
    for (const auto& vi : v.v) {
        p *= z - vi + 1;
    }
    return p;
}

} // namespace

void check_wave_input(const WaveInput& w) {
    if (w.x.size() != w.z.magnon_count()) {
        throw InvalidSpec("wave function needs one magnon site per root: " + std::to_string(w.x.size()) + " sites, " +
                          std::to_string(w.z.magnon_count()) + " roots");
    }
    if (w.v.v.size() != static_cast<std::size_t>(w.chain_length)) {
        throw DimensionError("inhomogeneity count does not match chain length");
    }
    for (std::size_t i = 0; i < w.x.size(); ++i) {
        if (w.x[i] < 1 || w.x[i] > w.chain_length || (i > 0 && w.x[i] <= w.x[i - 1])) {
            throw InvalidSpec("magnon sites must be strictly increasing within 1.." + std::to_string(w.chain_length));
        }
    }
}

Rational amplitude(const std::vector<Rational>& z) {
    Rational p(1);
    for (std::size_t k = 0; k < z.size(); ++k) {
        for (std::size_t l = k + 1; l < z.size(); ++l) {
            const Rational den = (z[k] - z[l]) * (z[k] + z[l] + 1);
            if (den.is_zero()) {
                throw PoleError("amplitude pole between roots " + z[k].str() + " and " + z[l].str());
            }
            p *= (z[k] - z[l] + 1) * (z[k] + z[l] + 2) / den;
        }
    }
    return p;
}

Rational wave_part(int x, const Rational& z, const WaveInput& w) {
    Rational p = sign_power(w.chain_length) * (w.q - z - 1);
    for (int j = 1; j <= w.chain_length; ++j) {
        const Rational& vj = w.v.at(j);
        p *= z + vj;
        if (j < x) {
            p *= z - vj + 1;
        } else if (j > x) {
            p *= z - vj;
        }
    }
    return p;
}

Rational wave_function(const WaveInput& w) {
    check_wave_input(w);
    const std::size_t m = w.z.magnon_count();
    const std::size_t full = (std::size_t{1} << m) - 1;
    Rational total(0);
    for (std::size_t tau = 0; tau <= full; ++tau) {
        const std::vector<Rational> zt = reflect(w.z.roots, tau);
        // phi[r][k]: root r placed at magnon k
        std::vector<std::vector<Rational>> phi(m, std::vector<Rational>(m));
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t k = 0; k < m; ++k) {
                phi[r][k] = wave_part(w.x[k], zt[r], w);
            }
        }
        // pair[s][r]: amplitude factor when root s precedes root r
        std::vector<std::vector<Rational>> pair(m, std::vector<Rational>(m));
        for (std::size_t s = 0; s < m; ++s) {
            for (std::size_t r = 0; r < m; ++r) {
                if (s == r) {
                    continue;
                }
                const Rational den = (zt[s] - zt[r]) * (zt[s] + zt[r] + 1);
                if (den.is_zero()) {
                    throw PoleError("wave function pole at " + tau_string(tau, m) + ", roots " +
                                    std::to_string(s + 1) + " and " + std::to_string(r + 1));
                }
                pair[s][r] = (zt[s] - zt[r] + 1) * (zt[s] + zt[r] + 2) / den;
            }
        }
        std::vector<Rational> f(full + 1);
        f[0] = 1;
        for (std::size_t used = 0; used < full; ++used) {
            if (f[used].is_zero()) {
                continue;
            }
            const auto k = static_cast<std::size_t>(std::popcount(used));
            for (std::size_t r = 0; r < m; ++r) {
                if ((used >> r) & 1U) {
                    continue;
                }
                Rational t = f[used] * phi[r][k];
                for (std::size_t s = 0; s < m && !t.is_zero(); ++s) {
                    if ((used >> s) & 1U) {
                        t *= pair[s][r];
                    }
                }
                f[used | (std::size_t{1} << r)] += t;
            }
        }
        total += tau_sign(tau) * f[full];
    }
    return total;
}

Rational wave_function_enumerated(const WaveInput& w) {
    check_wave_input(w);
    const std::size_t m = w.z.magnon_count();
    Rational total(0);
    for (std::size_t tau = 0; tau < (std::size_t{1} << m); ++tau) {
        const std::vector<Rational> zt = reflect(w.z.roots, tau);
        std::vector<std::size_t> sigma(m);
        std::iota(sigma.begin(), sigma.end(), std::size_t{0});
        do {
            std::vector<Rational> ordered(m);
            for (std::size_t i = 0; i < m; ++i) {
                ordered[i] = zt[sigma[i]];
            }
            Rational term;
            try {
                term = amplitude(ordered);
            } catch (const PoleError&) {
                std::string s = "wave function pole at " + tau_string(tau, m) + ", sigma=(";
                for (std::size_t i = 0; i < m; ++i) {
                    s += (i ? "," : "") + std::to_string(sigma[i] + 1);
                }
                throw PoleError(s + ")");
            }
            term *= tau_sign(tau);
            for (std::size_t i = 0; i < m; ++i) {
                term *= wave_part(w.x[i], ordered[i], w);
            }
            total += term;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return total;
}

Rational wave_function(const LatticeSpec& spec, const BetheRootSet& roots, const std::vector<int>& x) {
    return wave_function(make_input(spec, roots, x));
}

Rational closed_wave(const std::vector<Rational>& v, const std::vector<Rational>& z, const std::vector<int>& x) {
    if (x.size() != z.size()) {
        throw InvalidSpec("closed wave function needs one magnon site per root");
    }
    const std::size_t m = z.size();
    const int L = static_cast<int>(v.size());
    auto part = [&](int site, const Rational& zz) {
        Rational p(1);
        for (int j = 1; j <= L; ++j) {
            const Rational& vj = v[static_cast<std::size_t>(j - 1)];
            if (j < site) {
                p *= zz - vj + 1;
            } else if (j > site) {
                p *= zz - vj;
            }
        }
        return p;
    };
    std::vector<std::size_t> sigma(m);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    Rational total(0);
    do {
        Rational t(1);
        for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t l = k + 1; l < m; ++l) {
                const Rational d = z[sigma[k]] - z[sigma[l]];
                if (d.is_zero()) {
                    throw PoleError("closed wave function needs distinct roots");
                }
                t *= (d + 1) / d;
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            t *= part(x[i], z[sigma[i]]);
        }
        total += t;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

bool check_closed_wave(const LatticeSpec& spec, const BetheRootSet& roots) {
    const int L = spec.chain_length();
    ExactVector w = reference_state(spec).vector;
    for (const auto& z : roots.roots) {
        w = single_row_monodromy(spec, z, false).apply_block(1, 2, w);
    }
    const auto v = inhomogeneities(spec);
    const auto roles = site_roles(spec);
    ExactVector expected(w.dim());
    for (const auto& x : subsets(L, roots.magnon_count())) {
        const auto [index, sign] = rotated_basis(roles, x);
        expected[index] += sign * closed_wave(v.v, roots.roots, x);
    }
    return w == expected;
}

bool check_closed_fcr(const LatticeSpec& spec, const Rational& x, const Rational& y) {
    if (x == y) {
        throw PoleError("closed exchange relations need x != y");
    }
    const AuxOperator mx = single_row(spec, x, false);
    const AuxOperator my = single_row(spec, y, false);
    const ExactMatrix& ax = mx.block(1, 1).matrix;
    const ExactMatrix& bx = mx.block(1, 2).matrix;
    const ExactMatrix& ay = my.block(1, 1).matrix;
    const ExactMatrix& by = my.block(1, 2).matrix;
    const Rational h = (1 + y - x) / (y - x);
    const Rational k = Rational(1) / (y - x);
    return bx * by == by * bx && ax * by == h * (by * ax) - k * (bx * ay);
}

bool check_b_expansion(const LatticeSpec& spec, const Rational& z) {
    const Rational den = 2 * z + 1;
    if (den.is_zero()) {
        throw PoleError("B expansion pole at z = -1/2");
    }
    const ExactMatrix lhs = double_row(spec, z).block(1, 2).matrix;
    const std::size_t dim = lhs.rows();
    ExactMatrix rhs(dim, dim);
    for (std::size_t tau = 0; tau < 2; ++tau) {
        const Rational zt = tau ? -z - 1 : z;
        const ExactMatrix b = single_row(spec, zt, false).block(1, 2).matrix;
        const ExactMatrix a = single_row(spec, -zt - 1, false).block(1, 1).matrix;
        rhs += (tau_sign(tau) * (spec.q - zt - 1)) * (b * a);
    }
    return lhs == (sign_power(spec.chain_length()) * 2 * z / den) * rhs;
}

bool check_vecmitb(const LatticeSpec& spec, const BetheRootSet& roots) {
    const std::size_t m = roots.magnon_count();
    const auto v = inhomogeneities(spec);
    const ExactVector omega = reference_state(spec).vector;
    Rational norm = sign_power(static_cast<long>(m) * spec.chain_length());
    for (const auto& z : roots.roots) {
        const Rational den = 2 * z + 1;
        if (den.is_zero()) {
            throw PoleError("Bethe vector normalisation pole at z = -1/2");
        }
        norm *= 2 * z / den;
    }
    ExactVector rhs(omega.dim());
    for (std::size_t tau = 0; tau < (std::size_t{1} << m); ++tau) {
        const std::vector<Rational> zt = reflect(roots.roots, tau);
        Rational c = tau_sign(tau);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                const Rational d = zt[i] + zt[j] + 1;
                if (d.is_zero()) {
                    throw PoleError("Bethe vector expansion pole at " + tau_string(tau, m));
                }
                c *= (d + 1) / d; // h(z_i, -z_j-1)
            }
            c *= (spec.q - zt[i] - 1) * kappa(-zt[i] - 1, v);
        }
        if (c.is_zero()) {
            continue;
        }
        ExactVector w = omega;
        for (const auto& z : zt) {
            w = single_row_monodromy(spec, z, false).apply_block(1, 2, w);
        }
        rhs.axpy(c, w);
    }
    rhs *= norm;

    ExactVector lhs = omega;
    for (const auto& z : roots.roots) {
        lhs = DoubleRow(spec, z).B(lhs);
    }
    return lhs == rhs;
}

Rational two_reflection_sum(const Rational& q, const Rational& zi, const Rational& zj) {
    Rational total(0);
    for (std::size_t tau = 0; tau < 4; ++tau) {
        const Rational a = (tau & 1U) ? -zi - 1 : zi;
        const Rational b = (tau & 2U) ? -zj - 1 : zj;
        const Rational d = a + b + 1;
        if (d.is_zero()) {
            throw PoleError("two-reflection sum pole at " + tau_string(tau, 2));
        }
        total += tau_sign(tau) * (q - a - 1) * (q - b - 1) / d;
    }
    return total;
}

QuantumState cba_state(const LatticeSpec& spec, const BetheRootSet& roots) {
    require_valid(spec);
    const int L = spec.chain_length();
    const std::size_t m = roots.magnon_count();
    Rational norm = sign_power(static_cast<long>(m) * L);
    for (const auto& z : roots.roots) {
        norm *= 2 * z / (2 * z + 1);
    }
    const auto roles = site_roles(spec);
    const auto xs = subsets(L, m);
    std::vector<Rational> values(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) { values[i] = wave_function(spec, roots, xs[i]); });
    QuantumState out(L);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto [index, sign] = rotated_basis(roles, xs[i]);
        out.vector[index] = norm * sign * values[i];
    }
    return out;
}

std::vector<Rational> z_cba_all(const LatticeSpec& spec, const std::vector<ExternalConfig>& configs) {
    require_valid(spec);
    const BetheRootSet roots = canonical_bethe_roots(spec);
    std::vector<int> x0;
    for (const auto& c : spec.chords) {
        x0.push_back(c.end);
    }
    std::sort(x0.begin(), x0.end());
    const Rational reference = wave_function(spec, roots, x0);
    if (reference.is_zero()) {
        throw DegenerateError("reference wave function value vanishes");
    }
    std::vector<Rational> out(configs.size());
    parallel_for(configs.size(), [&](std::size_t i) {
        const ExternalConfig& c = configs[i];
        check_config(spec, c);
        if (!ice_rule_satisfied(spec, c)) {
            out[i] = 0;
            return;
        }
        const long flips = std::count(c.beta.begin(), c.beta.end(), 2);
        out[i] = sign_power(flips) * wave_function(spec, roots, magnon_positions(spec, c)) / reference;
    });
    return out;
}

Rational z_cba(const LatticeSpec& spec, const ExternalConfig& config) { return z_cba_all(spec, {config}).front(); }

} // namespace bpba
