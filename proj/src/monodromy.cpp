#include "bpba/monodromy.hpp"

#include "bpba/error.hpp"
#include "bpba/weights.hpp"

namespace bpba {

void apply_lax(AuxState& state, int chain_length, const LaxFactor& factor) {
    const std::size_t dim = state[0].dim();
    if (factor.site < 1 || factor.site > chain_length) {
        throw DimensionError("Lax factor site " + std::to_string(factor.site) + " outside 1.." +
                             std::to_string(chain_length));
    }
    const std::size_t bit = std::size_t{1} << (chain_length - factor.site);
    AuxState out{ExactVector(dim), ExactVector(dim)};
    if (!factor.conjugate) {
        // X'_r[i] = z·X_r[i] + X_{s(i)}[i with site label r], s(i) the site label of i.
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t i = 0; i < dim; ++i) {
                const std::size_t s = (i & bit) != 0 ? 1 : 0;
                const std::size_t j = r == 0 ? (i & ~bit) : (i | bit);
                Rational acc = factor.arg * state[r][i];
                acc += state[s][j];
                out[r][i] = std::move(acc);
            }
        }
    } else {
        // X'_r[i] = (z+1)·X_r[i] - δ_{s(i),r} Σ_c X_c[i with site label c].
        const Rational diag = factor.arg + 1;
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t i = 0; i < dim; ++i) {
                Rational acc = diag * state[r][i];
                const std::size_t s = (i & bit) != 0 ? 1 : 0;
                if (s == r) {
                    acc -= state[0][i & ~bit];
                    acc -= state[1][i | bit];
                }
                out[r][i] = std::move(acc);
            }
        }
    }
    state = std::move(out);
}

Monodromy& Monodromy::lax(int site, Rational arg, bool conjugate) {
    if (site < 1 || site > chain_length_) {
        throw DimensionError("Lax site " + std::to_string(site) + " outside 1.." + std::to_string(chain_length_));
    }
    factors_.emplace_back(LaxFactor{site, std::move(arg), conjugate});
    return *this;
}

Monodromy& Monodromy::diagonal(Rational first, Rational second) {
    factors_.emplace_back(AuxDiagonal{std::move(first), std::move(second)});
    return *this;
}

Monodromy& Monodromy::append(const Monodromy& other) {
    if (other.chain_length_ != chain_length_) {
        throw DimensionError("cannot multiply monodromies of different chain length");
    }
    factors_.insert(factors_.end(), other.factors_.begin(), other.factors_.end());
    return *this;
}

AuxState Monodromy::apply(AuxState state) const {
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
        if (const auto* lax = std::get_if<LaxFactor>(&*it)) {
            apply_lax(state, chain_length_, *lax);
        } else {
            const auto& d = std::get<AuxDiagonal>(*it);
            state[0] *= d.first;
            state[1] *= d.second;
        }
    }
    return state;
}

AuxState Monodromy::apply_column(int c, const ExactVector& v) const {
    if (c != 1 && c != 2) {
        throw DimensionError("auxiliary index must be 1 or 2");
    }
    AuxState in{ExactVector(v.dim()), ExactVector(v.dim())};
    in[static_cast<std::size_t>(c - 1)] = v;
    return apply(std::move(in));
}

ExactVector Monodromy::apply_block(int r, int c, const ExactVector& v) const {
    if (r != 1 && r != 2) {
        throw DimensionError("auxiliary index must be 1 or 2");
    }
    return std::move(apply_column(c, v)[static_cast<std::size_t>(r - 1)]);
}

AuxOperator Monodromy::materialize() const {
    const std::size_t dim = std::size_t{1} << chain_length_;
    AuxOperator out;
    out.chain_length = chain_length_;
    for (auto& b : out.blocks) {
        b = QuantumOperator::zero(chain_length_);
    }
    for (int c = 1; c <= 2; ++c) {
        for (std::size_t col = 0; col < dim; ++col) {
            AuxState res = apply_column(c, ExactVector::unit(dim, col));
            out.block(1, c).matrix.set_column(col, res[0]);
            out.block(2, c).matrix.set_column(col, res[1]);
        }
    }
    return out;
}

AuxOperator lax_embed(const Rational& z, int site, int chain_length, bool conjugate) {
    Monodromy m(chain_length);
    m.lax(site, z, conjugate);
    return m.materialize();
}

Monodromy single_row_monodromy(const LatticeSpec& spec, const Rational& z, bool hat) {
    const auto v = inhomogeneities(spec);
    const auto roles = site_roles(spec);
    const int L = spec.chain_length();
    Monodromy m(L);
    if (!hat) {
        for (int s = 1; s <= L; ++s) {
            m.lax(s, z - v.at(s), roles[static_cast<std::size_t>(s - 1)].is_end);
        }
    } else {
        for (int s = L; s >= 1; --s) {
            m.lax(s, z + v.at(s), roles[static_cast<std::size_t>(s - 1)].is_end);
        }
    }
    return m;
}

AuxOperator single_row(const LatticeSpec& spec, const Rational& z, bool hat) {
    return single_row_monodromy(spec, z, hat).materialize();
}

Monodromy double_row_monodromy(const LatticeSpec& spec, const Rational& z) {
    Monodromy m = single_row_monodromy(spec, z, false);
    m.diagonal(spec.q + z, spec.q - z);
    m.append(single_row_monodromy(spec, z, true));
    return m;
}

AuxOperator double_row(const LatticeSpec& spec, const Rational& z) { return double_row_monodromy(spec, z).materialize(); }

DoubleRow::DoubleRow(const LatticeSpec& spec, Rational z) : z_(std::move(z)), mono_(double_row_monodromy(spec, z_)) {}

ExactVector DoubleRow::D_tilde(const ExactVector& v) const {
    const Rational denom = 2 * z_ + 1;
    if (denom.is_zero()) {
        throw PoleError("D-tilde pole at z = -1/2");
    }
    AuxState col = mono_.apply_column(1, v);
    ExactVector d = mono_.apply_block(2, 2, v);
    d.axpy(-denom.inverse(), col[0]);
    return d;
}

QuantumOperator d_tilde(const LatticeSpec& spec, const Rational& z) {
    const Rational denom = 2 * z + 1;
    if (denom.is_zero()) {
        throw PoleError("D-tilde pole at z = -1/2");
    }
    AuxOperator u = double_row(spec, z);
    ExactMatrix d = u.block(2, 2).matrix;
    d -= denom.inverse() * u.block(1, 1).matrix;
    return QuantumOperator(u.chain_length, std::move(d));
}

QuantumState reference_state(const LatticeSpec& spec) {
    require_valid(spec);
    const int L = spec.chain_length();
    QuantumState s(L);
    s.vector[0] = 1;
    for (const auto& c : spec.chords) {
        s.vector = apply_s(s.vector, L, c.end);
    }
    return s;
}

Rational line_factor_f(const Rational& z, const Rational& theta) {
    return (z - theta - 1) * (z - theta + 1) * (z + theta) * (z + theta + 2);
}

Rational line_factor_g(const Rational& z, const Rational& theta) {
    return (z - theta) * (z - theta + 1) * (z + theta + 1) * (z + theta + 2);
}

Rational xi(const LatticeSpec& spec, const Rational& z) {
    Rational p(1);
    for (std::size_t k = 0; k < spec.n_lines(); ++k) {
        p *= line_factor_g(z, spec.signed_rapidity(k));
    }
    return p;
}

Rational lambda(const LatticeSpec& spec, const Rational& z) {
    Rational p(1);
    for (std::size_t k = 0; k < spec.n_lines(); ++k) {
        p *= line_factor_f(z, spec.signed_rapidity(k));
    }
    return p;
}

VacuumEigenvalues vacuum_eigenvalues(const LatticeSpec& spec, const Rational& z) {
    const Rational denom = 2 * z + 1;
    if (denom.is_zero()) {
        throw PoleError("vacuum eigenvalue delta-tilde has a pole at z = -1/2");
    }
    VacuumEigenvalues out;
    out.xi_val = xi(spec, z);
    out.lambda_val = lambda(spec, z);
    out.alpha_val = (spec.q + z) * out.xi_val;
    out.delta_tilde_val = 2 * z / denom * (spec.q - z - 1) * xi(spec, z - 1);
    return out;
}

bool check_crossing_with_prefactor(const LatticeSpec& spec, const Rational& z, const Rational& prefactor) {
    const AuxOperator hat = single_row(spec, z, true);
    const AuxOperator m = single_row(spec, -z - 1, false);
    // (S X S⁻¹)_{rc} with S = [[0,1],[-1,0]]: (1,1)=X22, (1,2)=-X21, (2,1)=-X12, (2,2)=X11.
    const ExactMatrix conj[2][2] = {
        {m.block(2, 2).matrix, Rational(-1) * m.block(2, 1).matrix},
        {Rational(-1) * m.block(1, 2).matrix, m.block(1, 1).matrix},
    };
    for (int r = 1; r <= 2; ++r) {
        for (int c = 1; c <= 2; ++c) {
            // auxiliary transpose: (M̂^{t_a})_{rc} = M̂_{cr}
            if (hat.block(c, r).matrix != prefactor * conj[r - 1][c - 1]) {
                return false;
            }
        }
    }
    return true;
}

bool check_crossing(const LatticeSpec& spec, const Rational& z) {
    return check_crossing_with_prefactor(spec, z, sign_power(spec.chain_length()));
}

bool check_double_row_bybe(const LatticeSpec& spec, const Rational& x, const Rational& y) {
    const AuxOperator ux = double_row(spec, x);
    const AuxOperator uy = double_row(spec, y);
    const std::size_t dim = std::size_t{1} << spec.chain_length();
    const std::size_t total = 4 * dim;
    // index = a1·2·dim + a2·dim + q
    ExactMatrix u1(total, total);
    ExactMatrix u2(total, total);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            const auto& bx = ux.block(static_cast<int>(a) + 1, static_cast<int>(b) + 1).matrix;
            const auto& by = uy.block(static_cast<int>(a) + 1, static_cast<int>(b) + 1).matrix;
            for (std::size_t other = 0; other < 2; ++other) {
                for (std::size_t i = 0; i < dim; ++i) {
                    for (std::size_t j = 0; j < dim; ++j) {
                        u1(a * 2 * dim + other * dim + i, b * 2 * dim + other * dim + j) = bx(i, j);
                        u2(other * 2 * dim + a * dim + i, other * 2 * dim + b * dim + j) = by(i, j);
                    }
                }
            }
        }
    }
    // Unnormalised R-matrices: the scalar prefactors agree on both sides.
    const ExactMatrix rm = tensor(lax_matrix(x - y), ExactMatrix::identity(dim));
    const ExactMatrix rp = tensor(lax_matrix(x + y), ExactMatrix::identity(dim));
    return rm * u1 * rp * u2 == u2 * rp * u1 * rm;
}

} // namespace bpba
