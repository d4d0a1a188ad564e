#include "bpba/aba.hpp"

#include "bpba/contraction.hpp"
#include "bpba/error.hpp"

namespace bpba {

namespace {

std::size_t contraction_index(const LatticeSpec& spec, const ExternalConfig& config) {
    std::vector<int> labels(static_cast<std::size_t>(spec.chain_length()));
    for (std::size_t k = 0; k < spec.n_lines(); ++k) {
        labels[static_cast<std::size_t>(spec.chords[k].start - 1)] = config.alpha[k];
        labels[static_cast<std::size_t>(spec.chords[k].end - 1)] = config.beta[k];
    }
    return basis_index(labels);
}

// ∏_{i≠k} 1/((z_k - z_i)(z_k + z_i + 1))
Rational pair_product(const std::vector<Rational>& zs, std::size_t k) {
    Rational p(1);
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (i != k) {
            p /= (zs[k] - zs[i]) * (zs[k] + zs[i] + 1);
        }
    }
    return p;
}

void require_root_index(const BetheRootSet& roots, std::size_t k) {
    if (k < 1 || k > roots.magnon_count()) {
        throw InvalidSpec("unwanted term index " + std::to_string(k) + " outside 1.." +
                          std::to_string(roots.magnon_count()));
    }
}

// 𝓑(z_1)⋯𝓑(z_m)|Ω⟩ without the vanishing check.
QuantumState creation_product(const LatticeSpec& spec, const std::vector<Rational>& roots) {
    QuantumState psi = reference_state(spec);
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
        psi.vector = double_row_monodromy(spec, *it).apply_block(1, 2, psi.vector);
    }
    return psi;
}

} // namespace

QuantumState bethe_state(const LatticeSpec& spec, const BetheRootSet& roots) {
    QuantumState psi = creation_product(spec, roots.roots);
    if (psi.vector.is_zero()) {
        throw DegenerateError("Bethe state vanishes identically");
    }
    return psi;
}

AbaResult aba_solve(const LatticeSpec& spec) {
    AbaResult out;
    out.roots = canonical_bethe_roots(spec);
    out.bethe_state = bethe_state(spec, out.roots);
    out.normalization_component = contract(spec, out.bethe_state, ExternalConfig::reference(spec.n_lines()));
    return out;
}

Rational contract(const LatticeSpec& spec, const QuantumState& state, const ExternalConfig& config) {
    check_config(spec, config);
    if (state.chain_length != spec.chain_length()) {
        throw DimensionError("state length does not match the lattice");
    }
    return state.vector[contraction_index(spec, config)];
}

std::vector<Rational> z_aba_all(const LatticeSpec& spec, const std::vector<ExternalConfig>& configs) {
    const AbaResult res = aba_solve(spec);
    if (res.normalization_component.is_zero()) {
        throw DegenerateError("reference component of the Bethe state vanishes");
    }
    std::vector<Rational> out;
    out.reserve(configs.size());
    for (const auto& c : configs) {
        if (!ice_rule_satisfied(spec, c)) {
            out.emplace_back(0);
            continue;
        }
        out.push_back(contract(spec, res.bethe_state, c) / res.normalization_component);
    }
    return out;
}

Rational z_aba(const LatticeSpec& spec, const ExternalConfig& config) { return z_aba_all(spec, {config}).front(); }

InvarianceReport invariance_report(const LatticeSpec& spec, const QuantumState& state, const Rational& z) {
    const Monodromy u = double_row_monodromy(spec, z);
    const Rational lam = lambda(spec, z);
    const AuxState col1 = u.apply_column(1, state.vector);
    const AuxState col2 = u.apply_column(2, state.vector);
    InvarianceReport r;
    r.a_eigen = col1[0] == lam * (spec.q + z) * state.vector;
    r.c_annihilates = col1[1].is_zero();
    r.b_annihilates = col2[0].is_zero();
    r.d_eigen = col2[1] == lam * (spec.q - z) * state.vector;
    return r;
}

bool check_invariance(const LatticeSpec& spec, const QuantumState& state, const Rational& z) {
    return invariance_report(spec, state, z).ok();
}

bool check_baxter(const LatticeSpec& spec, const Rational& z) {
    const Rational qz = q_function(spec, z);
    if (qz.is_zero()) {
        throw PoleError("Q(z) vanishes at z = " + z.str());
    }
    const Rational lam = lambda(spec, z);
    return xi(spec, z) * q_function(spec, z - 1) / qz == lam && xi(spec, z - 1) * q_function(spec, z + 1) / qz == lam;
}

bool check_lambda_xi_identity(const LatticeSpec& spec, const Rational& z) {
    return lambda(spec, z + 1) / xi(spec, z + 1) == xi(spec, z - 1) / lambda(spec, z);
}

OpenFcrCoefficients open_fcr_coefficients(const Rational& x, const Rational& y) {
    const Rational d = x - y;
    const Rational s = x + y + 1;
    const Rational tx = 2 * x + 1;
    const Rational ty = 2 * y + 1;
    if (d.is_zero() || s.is_zero() || tx.is_zero() || ty.is_zero()) {
        throw PoleError("exchange-relation coefficients are singular at x = " + x.str() + ", y = " + y.str());
    }
    OpenFcrCoefficients c;
    c.h_a = (x + y) * (x - y - 1) / (d * s);
    c.g_a = 2 * y / (d * ty);
    c.g_dt = Rational(-1) / s;
    c.h_dt = (x - y + 1) * (x + y + 2) / (d * s);
    c.k_a = 4 * y * (x + 1) / (tx * ty * s);
    c.k_dt = Rational(-2) * (x + 1) / (d * tx);
    return c;
}

UnwantedTerms unwanted_terms(const LatticeSpec& spec, const BetheRootSet& roots, const Rational& z, std::size_t k) {
    require_root_index(roots, k);
    const auto& zs = roots.roots;
    const Rational& zk = zs[k - 1];
    const auto vac = vacuum_eigenvalues(spec, zk);
    const Rational a_term = vac.alpha_val * q_from_roots(zs, zk - 1);
    const Rational d_term = vac.delta_tilde_val * q_from_roots(zs, zk + 1);
    const Rational pairs = pair_product(zs, k - 1);
    UnwantedTerms out;
    out.m_k = -(a_term / ((z - zk) * (2 * zk + 1)) + d_term / (2 * (z + zk + 1) * (zk + 1))) * pairs;
    out.n_k = -(2 * z + 2) / (2 * z + 1) *
              (a_term / ((z + zk + 1) * (2 * zk + 1)) + d_term / (2 * (z - zk) * (zk + 1))) * pairs;
    return out;
}

UnwantedTerms unwanted_terms_expanded(const LatticeSpec& spec, const BetheRootSet& roots, const Rational& z,
                                      std::size_t k) {
    require_root_index(roots, k);
    const auto& zs = roots.roots;
    const Rational& zk = zs[k - 1];
    const auto vac = vacuum_eigenvalues(spec, zk);
    Rational prod_ha(1);
    Rational prod_hd(1);
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (i != k - 1) {
            const auto c = open_fcr_coefficients(zk, zs[i]);
            prod_ha *= c.h_a;
            prod_hd *= c.h_dt;
        }
    }
    const auto c = open_fcr_coefficients(z, zk);
    UnwantedTerms out;
    out.m_k = c.g_a * prod_ha * vac.alpha_val + c.g_dt * prod_hd * vac.delta_tilde_val;
    out.n_k = c.k_a * prod_ha * vac.alpha_val + c.k_dt * prod_hd * vac.delta_tilde_val;
    return out;
}

UnwantedTerms unwanted_terms(const LatticeSpec& spec, const Rational& z, std::size_t k) {
    return unwanted_terms(spec, canonical_bethe_roots(spec), z, k);
}

bool check_off_shell_action(const LatticeSpec& spec, const BetheRootSet& roots, const Rational& z) {
    const QuantumState psi = bethe_state(spec, roots);
    const DoubleRow u(spec, z);
    const auto vac = vacuum_eigenvalues(spec, z);
    const Rational qz = q_from_roots(roots.roots, z);
    if (qz.is_zero()) {
        throw PoleError("Q(z) vanishes at z = " + z.str());
    }
    ExactVector a_expected = vac.alpha_val * q_from_roots(roots.roots, z - 1) / qz * psi.vector;
    ExactVector d_expected = vac.delta_tilde_val * q_from_roots(roots.roots, z + 1) / qz * psi.vector;
    for (std::size_t k = 1; k <= roots.magnon_count(); ++k) {
        BetheRootSet replaced = roots;
        replaced.roots[k - 1] = z;
        const QuantumState psi_k = creation_product(spec, replaced.roots);
        const auto terms = unwanted_terms(spec, roots, z, k);
        a_expected.axpy(terms.m_k, psi_k.vector);
        d_expected.axpy(terms.n_k, psi_k.vector);
    }
    return u.A(psi.vector) == a_expected && u.D_tilde(psi.vector) == d_expected;
}

bool check_fcr_open(const LatticeSpec& spec, const Rational& x, const Rational& y) {
    const auto c = open_fcr_coefficients(x, y);
    const AuxOperator ux = double_row(spec, x);
    const AuxOperator uy = double_row(spec, y);
    const auto dt = [](const AuxOperator& u, const Rational& z) {
        ExactMatrix d = u.block(2, 2).matrix;
        d -= (2 * z + 1).inverse() * u.block(1, 1).matrix;
        return d;
    };
    const ExactMatrix& ax = ux.block(1, 1).matrix;
    const ExactMatrix& ay = uy.block(1, 1).matrix;
    const ExactMatrix& bx = ux.block(1, 2).matrix;
    const ExactMatrix& by = uy.block(1, 2).matrix;
    const ExactMatrix dx = dt(ux, x);
    const ExactMatrix dy = dt(uy, y);

    if (bx * by != by * bx) {
        return false;
    }
    const ExactMatrix a_rhs = c.h_a * (by * ax) + c.g_a * (bx * ay) + c.g_dt * (bx * dy);
    if (ax * by != a_rhs) {
        return false;
    }
    const ExactMatrix d_rhs = c.h_dt * (by * dx) + c.k_a * (bx * ay) + c.k_dt * (bx * dy);
    return dx * by == d_rhs;
}

bool check_b_reflection(const LatticeSpec& spec, const Rational& z) {
    if (z.is_zero() || z == Rational(-1)) {
        throw PoleError("B-reflection relation is singular at z = " + z.str());
    }
    const AuxOperator u = double_row(spec, z);
    const AuxOperator u_ref = double_row(spec, -z - 1);
    return u.block(1, 2).matrix == (-z / (z + 1)) * u_ref.block(1, 2).matrix;
}

Rational reduction_factor(const Rational& theta, const Rational& q, const std::vector<Rational>& other_roots,
                          const InhomogeneityAssignment& lower_v) {
    Rational h = 4 * theta * (theta + 1) * (q + theta);
    for (const auto& zi : other_roots) {
        h *= (theta + zi + 2) * (theta - zi - 1) * (theta + zi) * (theta - zi + 1);
    }
    for (const auto& vk : lower_v.v) {
        h *= (theta + vk) * (theta - vk + 1);
    }
    return h;
}

bool check_reduction(const LatticeSpec& spec, const std::vector<Rational>& other_roots) {
    require_valid(spec);
    const int L = spec.chain_length();
    if (spec.n_lines() < 2) {
        throw InvalidSpec("reduction identity needs at least two lines");
    }
    if (spec.chords.front() != Chord{L, L - 1}) {
        throw InvalidSpec("reduction identity needs line 1 on sites (2N, 2N-1)");
    }
    const Rational& theta = spec.rapidities.front();
    const bool in_b = spec.reflected.front();

    BetheRootSet roots;
    roots.roots.push_back(in_b ? theta : -theta);
    roots.roots.insert(roots.roots.end(), other_roots.begin(), other_roots.end());
    const QuantumState big = bethe_state(spec, roots);

    // Components with different labels on sites 2N-1 and 2N must vanish.
    for (std::size_t i = 0; i < big.dim(); ++i) {
        if (site_label(i, L, L - 1) != site_label(i, L, L) && !big.vector[i].is_zero()) {
            return false;
        }
    }

    LatticeSpec lower;
    lower.chords.assign(spec.chords.begin() + 1, spec.chords.end());
    lower.reflected.assign(spec.reflected.begin() + 1, spec.reflected.end());
    lower.rapidities.assign(spec.rapidities.begin() + 1, spec.rapidities.end());
    lower.q = spec.q;

    const QuantumState small = creation_product(lower, other_roots);

    const Rational h = reduction_factor(in_b ? theta : -theta, spec.q, other_roots, inhomogeneities(lower));
    const QuantumState pair = in_b ? boundary_line_invariant(theta, spec.q) : line_invariant();
    return big.vector == tensor(small.vector, h * pair.vector);
}

} // namespace bpba
