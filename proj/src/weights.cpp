#include "bpba/weights.hpp"

#include "bpba/error.hpp"

namespace bpba {

namespace {

ExactMatrix unnormalized_r(const Rational& theta) {
    ExactMatrix m = permutation_matrix();
    for (std::size_t i = 0; i < 4; ++i) {
        m(i, i) += theta;
    }
    return m;
}

} // namespace

RMatrix r_matrix(const Rational& theta) {
    if (theta == Rational(-1)) {
        throw PoleError("R-matrix pole at theta = -1");
    }
    ExactMatrix m = unnormalized_r(theta);
    m *= (theta + 1).inverse();
    return RMatrix{theta, std::move(m)};
}

KMatrix k_matrix(const Rational& theta, const Rational& q) {
    if ((q + theta).is_zero()) {
        throw PoleError("K-matrix pole at q + theta = 0");
    }
    ExactMatrix m(2, 2);
    m(0, 0) = 1;
    m(1, 1) = (q - theta) / (q + theta);
    return KMatrix{theta, q, std::move(m)};
}

ExactMatrix s_matrix() { return ExactMatrix{{0, 1}, {-1, 0}}; }

ExactMatrix s_matrix_inverse() { return ExactMatrix{{0, -1}, {1, 0}}; }

ExactMatrix permutation_matrix() {
    ExactMatrix p(4, 4);
    p(0, 0) = 1;
    p(1, 2) = 1;
    p(2, 1) = 1;
    p(3, 3) = 1;
    return p;
}

ExactVector singlet() { return ExactVector{0, 1, -1, 0}; }

ExactMatrix antisymmetrizer() {
    ExactMatrix a = ExactMatrix::identity(4) - permutation_matrix();
    a *= Rational(1, 2);
    return a;
}

ExactMatrix lax_matrix(const Rational& z) { return unnormalized_r(z); }

ExactMatrix conjugate_lax_matrix(const Rational& z) {
    // Σ e_ab ⊗ e_ab has a 1 at row (a,a), column (b,b).
    ExactMatrix m = ExactMatrix::identity(4);
    m *= z + 1;
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            m(2 * a + a, 2 * b + b) -= 1;
        }
    }
    return m;
}

ExactMatrix embed_two_leg(const ExactMatrix& m, int first, int second) {
    if (m.rows() != 4 || m.cols() != 4 || first == second || first < 1 || first > 3 || second < 1 || second > 3) {
        throw DimensionError("embed_two_leg expects a 4x4 matrix and two distinct legs in 1..3");
    }
    const int other = 6 - first - second;
    ExactMatrix out(8, 8);
    for (std::size_t row = 0; row < 8; ++row) {
        for (std::size_t col = 0; col < 8; ++col) {
            auto digit = [](std::size_t i, int leg) { return (i >> (3 - leg)) & 1U; };
            if (digit(row, other) != digit(col, other)) {
                continue;
            }
            std::size_t r = 2 * digit(row, first) + digit(row, second);
            std::size_t c = 2 * digit(col, first) + digit(col, second);
            out(row, col) = m(r, c);
        }
    }
    return out;
}

ExactMatrix partial_transpose(const ExactMatrix& m, int leg) {
    if (m.rows() != 4 || m.cols() != 4 || (leg != 1 && leg != 2)) {
        throw DimensionError("partial_transpose expects a 4x4 matrix and leg 1 or 2");
    }
    ExactMatrix out(4, 4);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            for (std::size_t c = 0; c < 2; ++c) {
                for (std::size_t d = 0; d < 2; ++d) {
                    // m(ab, cd) with leg-1 indices (a, c), leg-2 indices (b, d)
                    if (leg == 1) {
                        out(2 * c + b, 2 * a + d) = m(2 * a + b, 2 * c + d);
                    } else {
                        out(2 * a + d, 2 * c + b) = m(2 * a + b, 2 * c + d);
                    }
                }
            }
        }
    }
    return out;
}

bool check_ybe(const Rational& t1, const Rational& t2, const Rational& t3) {
    const auto r12 = embed_two_leg(r_matrix(t1 - t2).matrix, 1, 2);
    const auto r13 = embed_two_leg(r_matrix(t1 - t3).matrix, 1, 3);
    const auto r23 = embed_two_leg(r_matrix(t2 - t3).matrix, 2, 3);
    return r12 * r13 * r23 == r23 * r13 * r12;
}

bool check_ybe_sign_flips(const Rational& t1, const Rational& t2, const Rational& t3) {
    for (int mask = 0; mask < 8; ++mask) {
        Rational a = (mask & 1) != 0 ? -t1 : t1;
        Rational b = (mask & 2) != 0 ? -t2 : t2;
        Rational c = (mask & 4) != 0 ? -t3 : t3;
        if (!check_ybe(a, b, c)) {
            return false;
        }
    }
    return true;
}

bool check_bybe(const Rational& t1, const Rational& t2, const Rational& q) {
    const auto r_minus = r_matrix(t1 - t2).matrix;
    const auto r_plus = r_matrix(t1 + t2).matrix;
    const auto id2 = ExactMatrix::identity(2);
    const auto k1 = tensor(k_matrix(t1, q).matrix, id2);
    const auto k2 = tensor(id2, k_matrix(t2, q).matrix);
    return r_minus * k1 * r_plus * k2 == k2 * r_plus * k1 * r_minus;
}

bool check_unitarity(const Rational& z) {
    const auto expected = (1 - z * z) * ExactMatrix::identity(4);
    return lax_matrix(z) * lax_matrix(-z) == expected &&
           conjugate_lax_matrix(z) * conjugate_lax_matrix(-z) == expected;
}

bool check_transpose(const Rational& z) {
    return partial_transpose(lax_matrix(z), 2) == Rational(-1) * conjugate_lax_matrix(-z - 1);
}

bool check_bootstrap(const Rational& z) {
    // legs: 1 = a, 2 = b, 3 = site
    const auto la = embed_two_leg(lax_matrix(z), 1, 3);
    const auto lb_shift = embed_two_leg(lax_matrix(z - 1), 2, 3);
    const auto lb = embed_two_leg(lax_matrix(z), 2, 3);
    const auto la_shift = embed_two_leg(lax_matrix(z - 1), 1, 3);
    const Rational scalar = (z + 1) * (z - 1);
    const auto y = singlet();
    for (std::size_t s = 0; s < 2; ++s) {
        ExactVector site = ExactVector::unit(2, s);
        ExactVector in = tensor(y, site);
        ExactVector expected = scalar * in;
        if (la * (lb_shift * in) != expected || lb * (la_shift * in) != expected) {
            return false;
        }
    }
    return true;
}

bool check_special_points() {
    const auto y = singlet();
    ExactMatrix yyt(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            yyt(i, j) = y[i] * y[j];
        }
    }
    const auto a = antisymmetrizer();
    return lax_matrix(0) == permutation_matrix() && lax_matrix(-1) == Rational(-2) * a &&
           lax_matrix(-1) == Rational(-1) * yyt && a * a == a;
}

bool check_s_conjugation(const Rational& z) {
    const auto id2 = ExactMatrix::identity(2);
    const auto s = tensor(id2, s_matrix());
    const auto s_inv = tensor(id2, s_matrix_inverse());
    return s * lax_matrix(z) * s_inv == conjugate_lax_matrix(z);
}

} // namespace bpba
