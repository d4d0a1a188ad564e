#include <doctest.h>

#include "bpba/aba.hpp"
#include "bpba/contraction.hpp"
#include "bpba/error.hpp"
#include "bpba/sampling.hpp"

using namespace bpba;

namespace {

const std::vector<Rational> kTheta{Rational(1, 3), Rational(2, 7), Rational(3, 11), Rational(5, 13)};

LatticeSpec figure1() { return figure1_spec(kTheta, Rational(7, 3)); }

} // namespace

TEST_CASE("two-site invariants") {
    const QuantumState cap = line_invariant();
    CHECK(cap[basis_index({1, 1})] == Rational(1));
    CHECK(cap[basis_index({2, 2})] == Rational(1));
    CHECK(cap[basis_index({1, 2})] == Rational(0));
    CHECK(cap[basis_index({2, 1})] == Rational(0));
    CHECK(boundary_line_invariant(1, 2).vector == ExactVector{1, 0, 0, Rational(1, 3)});
    CHECK(boundary_line_invariant(0, Rational(5, 3)).vector == cap.vector);
    CHECK_THROWS_AS(boundary_line_invariant(Rational(1, 2), Rational(-1, 2)), PoleError);
}

TEST_CASE("line eigen relations and the boundary-line relation") {
    Sampler s(41);
    for (int i = 0; i < 10; ++i) {
        CHECK(check_line_eigen_relations(s.rational(), s.rational()));
    }
    CHECK(check_boundary_line_relation(Rational(1, 5), Rational(1, 3), Rational(2)));
    CHECK(check_boundary_line_relation(Rational(-3, 7), Rational(2, 9), Rational(5, 4)));
}

TEST_CASE("initial invariant") {
    const LatticeSpec init = initial_spec({false, true}, {Rational(1, 3), Rational(2, 7)}, Rational(5, 2));
    const QuantumState psi = initial_invariant(init);
    CHECK(psi.vector ==
          tensor(boundary_line_invariant(Rational(2, 7), Rational(5, 2)).vector, line_invariant().vector));
    for (const Rational& z : {Rational(1, 6), Rational(-4, 5), Rational(9, 2)}) {
        CHECK(check_invariance(init, psi, z));
    }
    CHECK(z_direct(init, ExternalConfig::reference(2)) == Rational(1));
    CHECK_THROWS_AS(initial_invariant(figure1()), InvalidSpec);

    const LatticeSpec one{{{2, 1}}, {false}, {Rational(1, 3)}, Rational(2)};
    CHECK(check_invariance(one, initial_invariant(one), Rational(1, 6)));
}

TEST_CASE("move plans") {
    const LatticeSpec init = initial_spec({false, true}, {Rational(1, 3), Rational(2, 7)}, Rational(5, 2));
    CHECK(plan_moves(init).moves.empty());
    CHECK(build_invariant(init) == initial_invariant(init));

    const LatticeSpec crossed{{{4, 2}, {3, 1}}, {false, false}, {Rational(1, 3), Rational(2, 7)}, Rational(5, 2)};
    const MoveSequence plan = plan_moves(crossed);
    CHECK_FALSE(plan.moves.empty());
    CHECK(replay_pairing(plan) == crossed.chords);
    CHECK(plan.source == initial_spec(crossed.reflected, crossed.rapidities, crossed.q));

    const MoveSequence fig = plan_moves(figure1());
    CHECK(replay_pairing(fig) == std::vector<Chord>{{8, 3}, {7, 1}, {6, 5}, {4, 2}});
    CHECK(replay_pairing(plan_moves(figure1(), PlanOrder::kBubble)) == figure1().chords);
    CHECK(fig.moves != plan_moves(figure1(), PlanOrder::kBubble).moves);
}

TEST_CASE("woven invariants are twisted-Yangian invariants") {
    const LatticeSpec crossed{{{4, 2}, {3, 1}}, {false, false}, {Rational(1, 3), Rational(2, 7)}, Rational(5, 2)};
    const QuantumState psi = build_invariant(crossed);
    for (const Rational& z : {Rational(1, 6), Rational(-4, 5), Rational(9, 2)}) {
        CHECK(check_invariance(crossed, psi, z));
    }
    Sampler s(43);
    for (std::size_t n = 1; n <= 4; ++n) {
        const LatticeSpec spec = s.spec(n);
        const QuantumState state = build_invariant(spec);
        for (int i = 0; i < 3; ++i) {
            CHECK(check_invariance(spec, state, s.rational()));
        }
    }
}

TEST_CASE("Figure 1: direct state proportional to the Bethe state") {
    const LatticeSpec fig = figure1();
    Rational f;
    CHECK(proportional(build_invariant(fig).vector, bethe_state(fig, canonical_bethe_roots(fig)).vector, &f));
    CHECK_FALSE(f.is_zero());
}

TEST_CASE("Z from the direct construction") {
    const LatticeSpec l{{{2, 1}}, {false}, {Rational(1, 3)}, Rational(2)};
    CHECK(z_direct(l, {{1}, {2}}) == Rational(0));
    const LatticeSpec b{{{2, 1}}, {true}, {Rational(1, 3)}, Rational(2)};
    CHECK(z_direct(b, {{2}, {2}}) == Rational(5, 7));

    const LatticeSpec n2{{{4, 2}, {3, 1}}, {true, false}, {Rational(1, 3), Rational(2, 7)}, Rational(5, 2)};
    CHECK(z_direct(n2, {{1, 2}, {1, 2}}) == Rational(13, 34));
    CHECK(z_direct(n2, {{1, 2}, {2, 1}}) == Rational(21, 34));
    CHECK(z_direct(n2, {{2, 1}, {1, 2}}) == Rational(273, 578));
    CHECK(z_direct(n2, {{2, 1}, {2, 1}}) == Rational(169, 578));
    CHECK(z_direct(n2, {{2, 2}, {2, 2}}) == Rational(13, 17));

    const LatticeSpec init8 = initial_spec({false, true, true, true}, kTheta, Rational(7, 3));
    CHECK(z_direct(init8, {{1, 1, 1, 2}, {1, 1, 1, 2}}) == Rational(38, 53));
    CHECK(z_direct(init8, {{1, 1, 2, 2}, {1, 1, 2, 2}}) == Rational(1292, 2279));
}

TEST_CASE("two plans give the same partition functions") {
    Sampler s(47);
    for (int i = 0; i < 4; ++i) {
        const LatticeSpec spec = s.spec(3);
        const auto cfg = all_configs(3);
        CHECK(z_direct_all(spec, cfg, PlanOrder::kReduction) == z_direct_all(spec, cfg, PlanOrder::kBubble));
    }
}

TEST_CASE("singular move argument") {
    const LatticeSpec init = initial_spec({false, false}, {Rational(1, 3), Rational(2, 7)}, Rational(5, 2));
    MoveSequence plan{{Move{2, Rational(1)}}, init, init};
    CHECK_THROWS_AS(build_invariant(plan), PoleError);
}
