#include <doctest.h>

#include "bpba/error.hpp"
#include "bpba/sampling.hpp"
#include "bpba/weights.hpp"

using namespace bpba;

TEST_CASE("R-matrix entries") {
    CHECK(r_matrix(0).matrix == permutation_matrix());
    const Rational h(1, 2);
    CHECK(r_matrix(1).matrix == ExactMatrix{{1, 0, 0, 0}, {0, h, h, 0}, {0, h, h, 0}, {0, 0, 0, 1}});
    const Rational t(2, 5);
    const ExactMatrix r = r_matrix(t).matrix;
    CHECK(r(0, 0) == Rational(1));
    CHECK(r(1, 1) == t / (t + 1));
    CHECK(r(1, 2) == Rational(1) / (t + 1));
    CHECK_THROWS_AS(r_matrix(-1), PoleError);
}

TEST_CASE("K-matrix entries") {
    CHECK(k_matrix(0, Rational(3, 2)).matrix == ExactMatrix::identity(2));
    CHECK(k_matrix(Rational(2, 3), Rational(2, 3)).matrix == ExactMatrix{{1, 0}, {0, 0}});
    CHECK(k_matrix(1, 2).matrix == ExactMatrix{{1, 0}, {0, Rational(1, 3)}});
    CHECK_THROWS_AS(k_matrix(Rational(1, 2), Rational(-1, 2)), PoleError);
}

TEST_CASE("constant matrices") {
    CHECK(s_matrix() * s_matrix() == Rational(-1) * ExactMatrix::identity(2));
    CHECK(s_matrix() * s_matrix_inverse() == ExactMatrix::identity(2));
    ExactMatrix yy(4, 4);
    const ExactVector y = singlet();
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            yy(i, j) = y[i] * y[j];
        }
    }
    CHECK(antisymmetrizer() == Rational(1, 2) * yy);
}

TEST_CASE("Yang-Baxter") {
    CHECK(check_ybe(Rational(1, 2), Rational(1, 3), 0));
    CHECK(check_ybe(0, 0, 0));
    CHECK_THROWS_AS(check_ybe(Rational(1, 2), Rational(3, 2), Rational(1, 7)), PoleError);
    CHECK(check_ybe_sign_flips(Rational(1, 5), Rational(2, 9), Rational(3, 7)));
}

TEST_CASE("boundary Yang-Baxter") {
    CHECK(check_bybe(Rational(1, 3), Rational(1, 5), Rational(7, 2)));
    CHECK(check_bybe(Rational(1, 3), Rational(1, 3), Rational(7, 2)));
    CHECK_THROWS_AS(check_bybe(Rational(1, 3), Rational(1, 5), Rational(-1, 3)), PoleError);
}

TEST_CASE("unitarity, transpose, special points") {
    CHECK(lax_matrix(Rational(1, 2)) * lax_matrix(Rational(-1, 2)) == Rational(3, 4) * ExactMatrix::identity(4));
    CHECK(lax_matrix(1) * lax_matrix(-1) == ExactMatrix(4, 4));
    for (const Rational& z : {Rational(0), Rational(1, 2), Rational(1)}) {
        CHECK(check_unitarity(z));
    }
    for (const Rational& z : {Rational(0), Rational(2, 7), Rational(-1)}) {
        CHECK(check_transpose(z));
    }
    CHECK(check_special_points());
    CHECK(lax_matrix(0) == permutation_matrix());
    CHECK(lax_matrix(-1) == Rational(-2) * antisymmetrizer());
    CHECK(antisymmetrizer() * antisymmetrizer() == antisymmetrizer());
}

TEST_CASE("bootstrap") {
    for (const Rational& z : {Rational(1, 2), Rational(1), Rational(3), Rational(2, 7)}) {
        CHECK(check_bootstrap(z));
    }
}

TEST_CASE("S-conjugation maps L to the conjugate Lax operator") {
    const Rational z(3, 11);
    CHECK(check_s_conjugation(z));
    const ExactMatrix s_site = tensor(ExactMatrix::identity(2), s_matrix());
    const ExactMatrix s_inv = tensor(ExactMatrix::identity(2), s_matrix_inverse());
    CHECK(s_site * lax_matrix(z) * s_inv == conjugate_lax_matrix(z));
}

TEST_CASE("random local identities") {
    Sampler s(7);
    int checked = 0;
    while (checked < 100) {
        const Rational a = s.rational(), b = s.rational(), c = s.rational(), q = s.rational();
        bool ybe = false, bybe = false, unitarity = false, transpose = false, bootstrap = false;
        try {
            ybe = check_ybe_sign_flips(a, b, c);
            bybe = check_bybe(a, b, q);
            unitarity = check_unitarity(a);
            transpose = check_transpose(a);
            bootstrap = check_bootstrap(a);
        } catch (const PoleError&) {
            continue;
        }
        CHECK(ybe);
        CHECK(bybe);
        CHECK(unitarity);
        CHECK(transpose);
        CHECK(bootstrap);
        ++checked;
    }
}
