#include "bpba/contraction.hpp"

#include <algorithm>

#include "bpba/aba.hpp"
#include "bpba/error.hpp"
#include "bpba/monodromy.hpp"
#include "bpba/weights.hpp"

namespace bpba {

namespace {

using Arrangement = std::vector<SiteRole>; // role of each site, index = site - 1

bool same_role(const SiteRole& a, const SiteRole& b) { return a.line == b.line && a.is_end == b.is_end; }

Arrangement initial_arrangement(std::size_t n) {
    Arrangement seq(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t end_site = 2 * (n - 1 - k) + 1;
        seq[end_site - 1] = SiteRole{k, true};
        seq[end_site] = SiteRole{k, false};
    }
    return seq;
}

std::vector<int> reduction_positions(const LatticeSpec& spec) {
    Arrangement seq = site_roles(spec);
    std::vector<int> positions;
    int top = spec.chain_length();
    while (top > 0) {
        const std::size_t line = seq[static_cast<std::size_t>(top - 1)].line;
        int pos = 0;
        for (int s = 1; s <= top; ++s) {
            if (same_role(seq[static_cast<std::size_t>(s - 1)], SiteRole{line, true})) {
                pos = s;
                break;
            }
        }
        for (int p = pos; p <= top - 2; ++p) {
            std::swap(seq[static_cast<std::size_t>(p - 1)], seq[static_cast<std::size_t>(p)]);
            positions.push_back(p);
        }
        top -= 2;
    }
    std::reverse(positions.begin(), positions.end());
    return positions;
}

std::vector<int> bubble_positions(const LatticeSpec& spec) {
    const Arrangement target = site_roles(spec);
    // target site of each role
    std::vector<int> where_start(spec.n_lines());
    std::vector<int> where_end(spec.n_lines());
    for (std::size_t s = 0; s < target.size(); ++s) {
        (target[s].is_end ? where_end : where_start)[target[s].line] = static_cast<int>(s + 1);
    }
    auto key = [&](const SiteRole& r) { return r.is_end ? where_end[r.line] : where_start[r.line]; };

    Arrangement seq = initial_arrangement(spec.n_lines());
    std::vector<int> positions;
    for (;;) {
        bool swapped = false;
        for (std::size_t p = seq.size() - 1; p >= 1; --p) {
            if (key(seq[p - 1]) > key(seq[p])) {
                std::swap(seq[p - 1], seq[p]);
                positions.push_back(static_cast<int>(p));
                swapped = true;
                break;
            }
        }
        if (!swapped) {
            break;
        }
    }
    return positions;
}

} // namespace

QuantumState line_invariant() { return QuantumState(2, ExactVector{1, 0, 0, 1}); }

QuantumState boundary_line_invariant(const Rational& theta, const Rational& q) {
    const ExactMatrix k1 = tensor(k_matrix(theta, q).matrix, ExactMatrix::identity(2));
    return QuantumState(2, k1 * line_invariant().vector);
}

QuantumState initial_invariant(const LatticeSpec& spec) {
    require_valid(spec);
    if (!is_initial(spec)) {
        throw InvalidSpec("initial_invariant needs the pairing ((2N,2N-1), ..., (2,1))");
    }
    ExactVector psi{1};
    for (std::size_t k = spec.n_lines(); k-- > 0;) {
        const QuantumState piece =
            spec.reflected[k] ? boundary_line_invariant(spec.rapidities[k], spec.q) : line_invariant();
        psi = tensor(psi, piece.vector);
    }
    return QuantumState(spec.chain_length(), std::move(psi));
}

MoveSequence plan_moves(const LatticeSpec& spec, PlanOrder order) {
    require_valid(spec);
    MoveSequence plan;
    plan.target = spec;
    plan.source = initial_spec(spec.reflected, spec.rapidities, spec.q);

    const std::vector<int> positions =
        order == PlanOrder::kReduction ? reduction_positions(spec) : bubble_positions(spec);

    std::vector<Rational> v = inhomogeneities(plan.source).v;
    for (int p : positions) {
        const auto i = static_cast<std::size_t>(p - 1);
        plan.moves.push_back(Move{p, v[i + 1] - v[i]});
        std::swap(v[i], v[i + 1]);
    }
    return plan;
}

std::vector<Chord> replay_pairing(const MoveSequence& plan) {
    Arrangement seq = site_roles(plan.source);
    for (const auto& m : plan.moves) {
        if (m.p < 1 || static_cast<std::size_t>(m.p) >= seq.size()) {
            throw InvalidSpec("move position " + std::to_string(m.p) + " out of range");
        }
        std::swap(seq[static_cast<std::size_t>(m.p - 1)], seq[static_cast<std::size_t>(m.p)]);
    }
    std::vector<Chord> chords(plan.source.n_lines());
    for (std::size_t s = 0; s < seq.size(); ++s) {
        auto& c = chords[seq[s].line];
        (seq[s].is_end ? c.end : c.start) = static_cast<int>(s + 1);
    }
    return chords;
}

QuantumState build_invariant(const MoveSequence& plan) {
    QuantumState psi = initial_invariant(plan.source);
    const int L = plan.source.chain_length();
    Arrangement roles = site_roles(plan.source);
    for (const auto& m : plan.moves) {
        if (m.arg == Rational(1) || m.arg == Rational(-1)) {
            throw PoleError("R-factor at sites " + std::to_string(m.p) + "," + std::to_string(m.p + 1) +
                            " is singular (argument " + m.arg.str() + ")");
        }
        const auto i = static_cast<std::size_t>(m.p - 1);
        const bool end_p = roles[i].is_end;
        const bool end_q = roles[i + 1].is_end;
        ExactVector& v = psi.vector;
        if (end_p) {
            v = apply_s(v, L, m.p, true);
        }
        if (end_q) {
            v = apply_s(v, L, m.p + 1, true);
        }
        v = apply_r_unnormalized(v, L, m.p, m.arg);
        if (end_p) {
            v = apply_s(v, L, m.p);
        }
        if (end_q) {
            v = apply_s(v, L, m.p + 1);
        }
        v = swap_adjacent(v, L, m.p);
        std::swap(roles[i], roles[i + 1]);
    }
    return psi;
}

QuantumState build_invariant(const LatticeSpec& spec, PlanOrder order) {
    const MoveSequence plan = plan_moves(spec, order);
    if (replay_pairing(plan) != spec.chords) {
        throw Error("internal: move plan does not reproduce the target pairing");
    }
    return build_invariant(plan);
}

std::vector<Rational> z_direct_all(const LatticeSpec& spec, const std::vector<ExternalConfig>& configs,
                                   PlanOrder order) {
    const QuantumState psi = build_invariant(spec, order);
    const Rational norm = contract(spec, psi, ExternalConfig::reference(spec.n_lines()));
    if (norm.is_zero()) {
        throw DegenerateError("reference component of the invariant vanishes");
    }
    std::vector<Rational> out;
    out.reserve(configs.size());
    for (const auto& c : configs) {
        out.push_back(ice_rule_satisfied(spec, c) ? contract(spec, psi, c) / norm : Rational(0));
    }
    return out;
}

Rational z_direct(const LatticeSpec& spec, const ExternalConfig& config) {
    return z_direct_all(spec, {config}).front();
}

bool check_line_eigen_relations(const Rational& z, const Rational& theta) {
    const ExactVector psi = line_invariant().vector;
    Monodromy first(2);
    first.lax(2, z + theta, false).lax(1, z + theta - 1, true);
    Monodromy second(2);
    second.lax(1, z - theta + 1, true).lax(2, z - theta, false);
    const Rational e1 = (z + theta - 1) * (z + theta + 1);
    const Rational e2 = (z - theta) * (z - theta + 2);
    for (int c = 1; c <= 2; ++c) {
        const AuxState r1 = first.apply_column(c, psi);
        const AuxState r2 = second.apply_column(c, psi);
        for (int r = 1; r <= 2; ++r) {
            const auto ri = static_cast<std::size_t>(r - 1);
            const ExactVector expected1 = r == c ? e1 * psi : ExactVector(psi.dim());
            const ExactVector expected2 = r == c ? e2 * psi : ExactVector(psi.dim());
            if (r1[ri] != expected1 || r2[ri] != expected2) {
                return false;
            }
        }
    }
    return true;
}

bool check_boundary_line_relation(const Rational& z, const Rational& theta, const Rational& q) {
    Monodromy lhs(2);
    lhs.lax(2, z - theta, false).diagonal(q + z, q - z).lax(2, z + theta, false);
    Monodromy rhs(2);
    rhs.lax(2, z + theta, false).diagonal(q + z, q - z).lax(2, z - theta, false);
    // K on the site of the Lax factors; K_2Ψ_∩ = K_1Ψ_∩ = Ψ_∧.
    const ExactMatrix k2 = tensor(ExactMatrix::identity(2), k_matrix(theta, q).matrix);
    const ExactVector wedge = boundary_line_invariant(theta, q).vector;
    const ExactVector cap = line_invariant().vector;
    for (int c = 1; c <= 2; ++c) {
        const AuxState l = lhs.apply_column(c, wedge);
        const AuxState r = rhs.apply_column(c, cap);
        for (std::size_t a = 0; a < 2; ++a) {
            if (l[a] != k2 * r[a]) {
                return false;
            }
        }
    }
    return true;
}

} // namespace bpba
