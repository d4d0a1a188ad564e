#include <doctest.h>

#include "bpba/error.hpp"
#include "bpba/monodromy.hpp"
#include "bpba/sampling.hpp"
#include "bpba/weights.hpp"

using namespace bpba;

namespace {

LatticeSpec one_line(bool reflected, Rational theta = Rational(1, 3), Rational q = Rational(2)) {
    return LatticeSpec{{{2, 1}}, {reflected}, {theta}, q};
}

LatticeSpec figure1() {
    return figure1_spec({Rational(1, 3), Rational(2, 7), Rational(3, 11), Rational(5, 13)}, Rational(7, 3));
}

} // namespace

TEST_CASE("basis convention: site 1 is the most significant digit") {
    CHECK(basis_index({1, 1, 1}) == 0);
    CHECK(basis_index({2, 1, 1}) == 4);
    CHECK(basis_index({1, 1, 2}) == 1);
    CHECK(basis_string(6, 3) == "221");
    CHECK(basis_labels(5, 3) == std::vector<int>{2, 1, 2});
    CHECK(site_label(4, 3, 1) == 2);
}

TEST_CASE("single Lax factor") {
    const AuxOperator p = lax_embed(0, 1, 1, false);
    CHECK(p.full() == permutation_matrix());
    const Rational z(2, 9);
    const AuxOperator l = lax_embed(z, 1, 1, false);
    CHECK(l.full() == lax_matrix(z));
    Rational trace(0);
    for (int r = 1; r <= 2; ++r) {
        for (std::size_t i = 0; i < 2; ++i) {
            trace += l.block(r, r).matrix(i, i);
        }
    }
    CHECK(trace == 4 * z + 2);
    CHECK(lax_embed(z, 1, 1, true).full() == conjugate_lax_matrix(z));
}

TEST_CASE("single row at special points is a product of permutations") {
    Monodromy m(2);
    m.lax(1, 0, false).lax(2, 0, false);
    const AuxOperator dense = m.materialize();
    const ExactMatrix p12 = tensor(permutation_matrix(), ExactMatrix::identity(2));
    ExactMatrix p13(8, 8);
    for (std::size_t i = 0; i < 8; ++i) {
        const std::size_t a = i >> 2, b = (i >> 1) & 1U, c = i & 1U;
        p13((c << 2) | (b << 1) | a, i) = 1;
    }
    CHECK(dense.full() == p12 * p13);
}

TEST_CASE("C annihilates the all-1 state for the closed monodromy") {
    Monodromy m(4);
    for (int s = 1; s <= 4; ++s) {
        m.lax(s, Rational(s, 7), false);
    }
    CHECK(m.apply_block(2, 1, ExactVector::unit(16, 0)).is_zero());
}

TEST_CASE("crossing relation") {
    CHECK(check_crossing(one_line(false, Rational(1, 3)), Rational(2, 7)));
    Sampler s(3);
    const LatticeSpec two = s.spec(2);
    CHECK(check_crossing(two, 0));
    CHECK(check_crossing(figure1(), Rational(5, 17)));
    CHECK_FALSE(check_crossing_with_prefactor(two, Rational(1, 4), -sign_power(two.chain_length())));
}

TEST_CASE("double row of one line matches its explicit product") {
    const Rational theta(1, 3), q(2), z(3, 10);
    const LatticeSpec l = one_line(false, theta, q);
    Monodromy m(2);
    m.lax(1, z - theta + 1, true)
        .lax(2, z - theta, false)
        .diagonal(q + z, q - z)
        .lax(2, z + theta, false)
        .lax(1, z + theta - 1, true);
    CHECK(double_row(l, z) == m.materialize());
}

TEST_CASE("reference state") {
    const QuantumState o = reference_state(one_line(false));
    CHECK(o[basis_index({2, 1})] == Rational(-1));
    CHECK(dot(o.vector, o.vector) == Rational(1));
    const QuantumState o2 = reference_state(initial_spec({false, true}, {Rational(1, 3), Rational(2, 7)}, 2));
    CHECK(o2[basis_index({2, 1, 2, 1})] == Rational(1));
    CHECK(dot(o2.vector, o2.vector) == Rational(1));
}

TEST_CASE("action on the reference state") {
    for (const LatticeSpec& spec : {one_line(false), one_line(true), figure1()}) {
        const Rational z(1, 4);
        const ExactVector o = reference_state(spec).vector;
        const DoubleRow u(spec, z);
        const VacuumEigenvalues ev = vacuum_eigenvalues(spec, z);
        CHECK(u.A(o) == ev.alpha_val * o);
        CHECK(u.C(o).is_zero());
        CHECK(u.D_tilde(o) == ev.delta_tilde_val * o);
        CHECK(d_tilde(spec, z)(o) == ev.delta_tilde_val * o);
    }
    CHECK_THROWS_AS(d_tilde(one_line(false), Rational(-1, 2)), PoleError);
    CHECK_THROWS_AS(vacuum_eigenvalues(one_line(false), Rational(-1, 2)), PoleError);
}

TEST_CASE("Lambda of one line") {
    const Rational theta(1, 3), z(2, 11);
    CHECK(lambda(one_line(true, theta), z) == line_factor_f(z, theta));
    CHECK(lambda(one_line(false, theta), z) == line_factor_f(z, -theta));
    const LatticeSpec fig = figure1();
    const Rational x(3, 7);
    CHECK(lambda(fig, x + 1) / xi(fig, x + 1) == xi(fig, x - 1) / lambda(fig, x));
    CHECK(lambda(fig, Rational(3, 8)) ==
          Rational::parse("92848559484535577276995/353106080708296880160768"));
    CHECK(xi(fig, Rational(3, 8)) == Rational::parse("-20723693586240091125625/823914188319359387041792"));
}

TEST_CASE("double-row boundary Yang-Baxter") {
    CHECK(check_double_row_bybe(one_line(true), Rational(1, 3), Rational(2, 7)));
    Sampler s(11);
    CHECK(check_double_row_bybe(s.spec(2), Rational(-2, 5), Rational(3, 4)));
}
