#include <doctest.h>

#include <algorithm>

#include "bpba/aba.hpp"
#include "bpba/cba.hpp"
#include "bpba/contraction.hpp"
#include "bpba/error.hpp"
#include "bpba/sampling.hpp"

using namespace bpba;

namespace {

LatticeSpec figure1() {
    return figure1_spec({Rational(1, 3), Rational(2, 7), Rational(3, 11), Rational(5, 13)}, Rational(7, 3));
}

WaveInput input(const LatticeSpec& spec, std::vector<Rational> roots, std::vector<int> x) {
    return WaveInput{inhomogeneities(spec), {std::move(roots)}, std::move(x), spec.q, spec.chain_length()};
}

} // namespace

TEST_CASE("amplitude") {
    CHECK(amplitude({Rational(2, 9)}) == Rational(1));
    const Rational a(1, 3), b(1, 5);
    CHECK(amplitude({a, b}) == (a - b + 1) * (a + b + 2) / ((a - b) * (a + b + 1)));
    CHECK(amplitude({a, b}) == Rational(323, 23));
    CHECK_THROWS_AS(amplitude({a, a}), PoleError);
    CHECK_THROWS_AS(amplitude({a, -a - 1}), PoleError);
}

TEST_CASE("wave part") {
    const LatticeSpec l{{{2, 1}}, {false}, {Rational(1, 3)}, Rational(2)};
    const WaveInput w = input(l, {Rational(1, 5)}, {1});
    CHECK(wave_part(1, Rational(1, 5), w) == Rational(448, 16875));
    CHECK(wave_part(1, w.v.at(2), w).is_zero());
    CHECK(wave_part(2, Rational(1), w).is_zero());
}

TEST_CASE("wave function: small cases and the enumerated oracle") {
    const LatticeSpec l{{{2, 1}}, {true}, {Rational(1, 3)}, Rational(2)};
    const Rational z(2, 11);
    const WaveInput w1 = input(l, {z}, {2});
    CHECK(wave_function(w1) == wave_part(2, z, w1) - wave_part(2, -z - 1, w1));
    CHECK(wave_function(input(l, {}, {})) == Rational(1));

    const LatticeSpec fig = figure1();
    const BetheRootSet roots = canonical_bethe_roots(fig);
    const WaveInput w = input(fig, roots.roots, {1, 2, 3, 5});
    CHECK(wave_function(w) == wave_function_enumerated(w));
    CHECK(wave_function(w) ==
          Rational::parse("1059997042524514522165539932155471180158882438391489167857672624537600000000000/"
                          "20724804823694227873108091232044424038060049496863203453964078601876028814807"));
    const WaveInput w2 = input(fig, roots.roots, {3, 4, 5, 7});
    CHECK(wave_function(w2) == wave_function_enumerated(w2));
}

TEST_CASE("wave function symmetries") {
    Sampler s(13);
    const LatticeSpec spec = s.spec(3);
    std::vector<Rational> z{Rational(1, 5), Rational(-2, 9), Rational(3, 7)};
    const std::vector<int> x{2, 3, 6};
    const Rational base = wave_function(input(spec, z, x));
    std::vector<Rational> shuffled{z[2], z[0], z[1]};
    CHECK(wave_function(input(spec, shuffled, x)) == base);
    std::vector<Rational> flipped = z;
    flipped[1] = -z[1] - 1;
    CHECK(wave_function(input(spec, flipped, x)) == -base);
}

TEST_CASE("wave function poles name the term") {
    const LatticeSpec fig = figure1();
    const WaveInput w = input(fig, {Rational(1, 5), Rational(1, 5)}, {1, 2});
    CHECK_THROWS_WITH_AS(wave_function(w), doctest::Contains("tau=(0,0)"), PoleError);
    CHECK_THROWS_WITH_AS(wave_function_enumerated(w), doctest::Contains("sigma=(1,2)"), PoleError);
    CHECK_THROWS_AS(wave_function(input(fig, {Rational(1, 5)}, {1, 2})), InvalidSpec);
    CHECK_THROWS_AS(wave_function(input(fig, {Rational(1, 5), Rational(1, 7)}, {2, 2})), InvalidSpec);
}

TEST_CASE("closed-chain wave function") {
    const std::vector<Rational> v{Rational(1, 3), Rational(-4, 3)};
    const Rational z(2, 7);
    CHECK(closed_wave(v, {z}, {1}) == z - v[1]);
    const Rational y(-1, 6);
    const Rational expected = (z - y + 1) / (z - y) * (z - v[1]) * (y - v[0] + 1) +
                              (y - z + 1) / (y - z) * (y - v[1]) * (z - v[0] + 1);
    CHECK(closed_wave(v, {z, y}, {1, 2}) == expected);
    CHECK_THROWS_AS(closed_wave(v, {z, z}, {1, 2}), PoleError);

    Sampler s(17);
    const LatticeSpec spec = s.spec(2);
    CHECK(check_closed_wave(spec, {{Rational(1, 5), Rational(-2, 9)}}));
    CHECK(check_closed_wave(spec, {{Rational(3, 8)}}));
}

TEST_CASE("closed exchange relations") {
    const LatticeSpec l{{{2, 1}}, {false}, {Rational(1, 3)}, Rational(2)};
    CHECK(check_closed_fcr(l, Rational(1, 3), Rational(2, 5)));
    Sampler s(19);
    CHECK(check_closed_fcr(s.spec(2), Rational(-4, 7), Rational(5, 3)));
    CHECK_THROWS_AS(check_closed_fcr(l, Rational(1, 3), Rational(1, 3)), PoleError);
}

TEST_CASE("open creation operator in closed operators") {
    const LatticeSpec l{{{2, 1}}, {false}, {Rational(1, 3)}, Rational(2)};
    CHECK(check_b_expansion(l, Rational(1, 4)));
    Sampler s(23);
    const LatticeSpec spec = s.spec(2);
    CHECK(check_b_expansion(spec, Rational(2, 7)));
    CHECK_THROWS_AS(check_b_expansion(spec, Rational(-1, 2)), PoleError);
}

TEST_CASE("open Bethe vector in closed operators") {
    const LatticeSpec spec{{{4, 2}, {3, 1}}, {true, false}, {Rational(1, 3), Rational(2, 7)}, Rational(5, 2)};
    CHECK(check_vecmitb(spec, {{Rational(1, 5)}}));
    CHECK(check_vecmitb(spec, {{Rational(1, 5), Rational(-2, 9)}}));
}

TEST_CASE("two-reflection identity") {
    Sampler s(29);
    for (int i = 0; i < 20; ++i) {
        const Rational q = s.rational(), a = s.rational(), b = s.rational();
        try {
            CHECK(two_reflection_sum(q, a, b).is_zero());
        } catch (const PoleError&) {
        }
    }
}

TEST_CASE("Z from the coordinate Bethe ansatz") {
    const LatticeSpec b{{{2, 1}}, {true}, {Rational(1, 3)}, Rational(2)};
    CHECK(z_cba(b, {{2}, {2}}) == Rational(5, 7));
    CHECK(z_cba(b, {{1}, {1}}) == Rational(1));
    CHECK(z_cba(b, {{1}, {2}}) == Rational(0));

    const LatticeSpec fig = figure1();
    const auto cfg = all_configs(4);
    CHECK(z_cba_all(fig, cfg) == z_aba_all(fig, cfg));
}

TEST_CASE("coordinate state equals the algebraic Bethe state") {
    const LatticeSpec fig = figure1();
    const BetheRootSet roots = canonical_bethe_roots(fig);
    CHECK(cba_state(fig, roots) == bethe_state(fig, roots));
    Sampler s(31);
    const LatticeSpec spec = s.spec(3);
    const BetheRootSet off{{Rational(1, 5), Rational(-2, 9), Rational(3, 4)}};
    CHECK(cba_state(spec, off) == bethe_state(spec, off));
}
