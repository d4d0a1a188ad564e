#include "bpba/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "bpba/aba.hpp"
#include "bpba/cba.hpp"
#include "bpba/contraction.hpp"
#include "bpba/error.hpp"
#include "bpba/monodromy.hpp"
#include "bpba/parallel.hpp"
#include "bpba/sampling.hpp"
#include "bpba/serialize.hpp"
#include "bpba/weights.hpp"

namespace bpba {

namespace {

constexpr int kMaxRedraws = 50;

class Recorder {
public:
    void check(const std::string& what, bool ok, const std::string& params) {
        ++checks;
        if (!ok) {
            failures.push_back(what + " [" + params + "]");
        }
    }

    std::size_t checks = 0;
    std::vector<std::string> failures;
};

using DrawFn = std::function<void(Sampler&, Recorder&)>;

std::string spec_str(const LatticeSpec& s) { return to_json(s).dump(); }

std::string kv(const char* k, const Rational& v) { return std::string(k) + "=" + v.str(); }

std::string roots_str(const std::vector<Rational>& r) {
    std::string s = "roots=(";
    for (std::size_t i = 0; i < r.size(); ++i) {
        s += (i ? "," : "") + r[i].str();
    }
    return s + ")";
}

void weights_draw(Sampler& s, Recorder& r) {
    const Rational t1 = s.rational(), t2 = s.rational(), t3 = s.rational(), q = s.rational(), z = s.rational();
    const std::string p = kv("t1", t1) + " " + kv("t2", t2) + " " + kv("t3", t3) + " " + kv("q", q) + " " + kv("z", z);
    r.check("ybe", check_ybe(t1, t2, t3), p);
    r.check("ybe sign flips", check_ybe_sign_flips(t1, t2, t3), p);
    r.check("bybe", check_bybe(t1, t2, q), p);
    r.check("unitarity", check_unitarity(z), p);
    r.check("transpose", check_transpose(z), p);
    r.check("bootstrap", check_bootstrap(z), p);
    r.check("s conjugation", check_s_conjugation(z), p);
    r.check("special points", check_special_points(), p);
}

void fcr_draw(Sampler& s, Recorder& r, std::size_t n) {
    const LatticeSpec spec = s.spec(n);
    const Rational x = s.rational(), y = s.rational();
    const std::string p = "spec=" + spec_str(spec) + " " + kv("x", x) + " " + kv("y", y);
    r.check("open fcr", check_fcr_open(spec, x, y), p);
    r.check("closed fcr", check_closed_fcr(spec, x, y), p);
    r.check("double-row bybe", check_double_row_bybe(spec, x, y), p);
    r.check("crossing", check_crossing(spec, x), p);
    r.check("b reflection", check_b_reflection(spec, x), p);
    r.check("b expansion", check_b_expansion(spec, x), p);
    r.check("two-reflection sum", two_reflection_sum(spec.q, x, y).is_zero(), p);
    if (n == 2) {
        r.check("vecmitb m=1", check_vecmitb(spec, BetheRootSet{{x}}), p);
        r.check("vecmitb m=2", check_vecmitb(spec, BetheRootSet{{x, y}}), p);
        r.check("closed wave", check_closed_wave(spec, BetheRootSet{{x, y}}), p);
    }
}

void baxter_draw(Sampler& s, Recorder& r, std::size_t n) {
    const LatticeSpec spec = s.spec(n);
    const Rational z = s.rational();
    const std::string p = "spec=" + spec_str(spec) + " " + kv("z", z);
    const BetheRootSet roots = canonical_bethe_roots(spec);
    r.check("baxter", check_baxter(spec, z), p);
    r.check("lambda/xi", check_lambda_xi_identity(spec, z), p);
    r.check("Q symmetry", q_function(spec, z) == q_function(spec, -z - 1), p);
    r.check("Q from roots", q_function(spec, z) == q_from_roots(roots.roots, z), p);
    for (std::size_t k = 1; k <= n; ++k) {
        const UnwantedTerms u = unwanted_terms(spec, z, k);
        const UnwantedTerms e = unwanted_terms_expanded(spec, roots, z, k);
        const std::string pk = p + " k=" + std::to_string(k);
        r.check("unwanted terms vanish", u.m_k.is_zero() && u.n_k.is_zero(), pk);
        r.check("unwanted terms expanded", e.m_k == u.m_k && e.n_k == u.n_k, pk);

        BetheRootSet bumped = roots;
        bumped.roots[k - 1] += Rational(1, 100);
        for (std::size_t l = 1; l <= n; ++l) {
            const UnwantedTerms b = unwanted_terms(spec, bumped, z, l);
            const bool nonzero = !b.m_k.is_zero() && !b.n_k.is_zero();
            const bool zero = b.m_k.is_zero() && b.n_k.is_zero();
            r.check("perturbed unwanted terms", l == k ? nonzero : zero, pk + " l=" + std::to_string(l));
        }
    }
    if (n <= 3) {
        r.check("off-shell action", check_off_shell_action(spec, roots, z), p);
    }
}

struct FixtureStates {
    LatticeSpec spec;
    QuantumState direct, aba, cba;
};

std::vector<FixtureStates> fixture_states() {
    std::vector<FixtureStates> out;
    for (const auto& spec : {figure1_fixture(), init8_fixture()}) {
        const BetheRootSet roots = canonical_bethe_roots(spec);
        out.push_back({spec, build_invariant(spec), bethe_state(spec, roots), cba_state(spec, roots)});
    }
    return out;
}

void invariance_draw(Sampler& s, Recorder& r, std::size_t n, const std::vector<FixtureStates>& fixtures) {
    const LatticeSpec spec = s.spec(n);
    const Rational z = s.rational();
    const std::string p = "spec=" + spec_str(spec) + " " + kv("z", z);
    const BetheRootSet roots = canonical_bethe_roots(spec);
    r.check("invariance direct", check_invariance(spec, build_invariant(spec), z), p);
    r.check("invariance aba", check_invariance(spec, bethe_state(spec, roots), z), p);
    r.check("invariance cba", check_invariance(spec, cba_state(spec, roots), z), p);
    for (const auto& f : fixtures) {
        const std::string pf = "fixture=" + spec_str(f.spec) + " " + kv("z", z);
        r.check("fixture invariance direct", check_invariance(f.spec, f.direct, z), pf);
        r.check("fixture invariance aba", check_invariance(f.spec, f.aba, z), pf);
        r.check("fixture invariance cba", check_invariance(f.spec, f.cba, z), pf);
    }
    const Rational theta = s.rational();
    const std::string pl = kv("z", z) + " " + kv("theta", theta) + " " + kv("q", spec.q);
    r.check("line eigen relations", check_line_eigen_relations(z, theta), pl);
    r.check("boundary-line relation", check_boundary_line_relation(z, theta, spec.q), pl);
}

void reduction_draw(Sampler& s, Recorder& r, std::size_t n, bool reflected_first) {
    std::vector<Chord> chords{Chord{static_cast<int>(2 * n), static_cast<int>(2 * n - 1)}};
    for (const auto& c : s.pairing(n - 1)) {
        chords.push_back(c);
    }
    std::vector<bool> reflected{reflected_first};
    for (std::size_t k = 1; k < n; ++k) {
        reflected.push_back(s.coin());
    }
    const LatticeSpec spec = s.spec_on(chords, reflected);
    std::vector<Rational> others;
    for (std::size_t k = 1; k < n; ++k) {
        others.push_back(s.rational());
    }
    r.check("reduction", check_reduction(spec, others), "spec=" + spec_str(spec) + " " + roots_str(others));
}

std::uint64_t draw_seed(std::uint64_t seed, std::size_t draw, int attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(draw), static_cast<std::uint32_t>(attempt)};
    std::uint64_t out[1];
    seq.generate(reinterpret_cast<std::uint32_t*>(out), reinterpret_cast<std::uint32_t*>(out) + 2);
    return out[0];
}

SuiteResult run_draws(const std::string& name, std::size_t draws, std::uint64_t seed,
                      const std::function<void(std::size_t, Sampler&, Recorder&)>& body) {
    std::vector<Recorder> recs(draws);
    std::vector<std::size_t> redraws(draws);
    parallel_for(draws, [&](std::size_t i) {
        for (int attempt = 0;; ++attempt) {
            Sampler sampler(draw_seed(seed, i, attempt));
            Recorder rec;
            try {
                body(i, sampler, rec);
                recs[i] = std::move(rec);
                return;
            } catch (const PoleError& e) {
                if (attempt + 1 >= kMaxRedraws) {
                    recs[i].check("draw", false, std::string("no pole-free draw: ") + e.what());
                    return;
                }
                ++redraws[i];
            } catch (const DegenerateError& e) {
                if (attempt + 1 >= kMaxRedraws) {
                    recs[i].check("draw", false, std::string("no nondegenerate draw: ") + e.what());
                    return;
                }
                ++redraws[i];
            }
        }
    });
    SuiteResult out;
    out.name = name;
    out.draws = draws;
    for (std::size_t i = 0; i < draws; ++i) {
        out.checks += recs[i].checks;
        out.redraws += redraws[i];
        for (const auto& f : recs[i].failures) {
            out.failures.push_back("draw " + std::to_string(i) + ": " + f);
        }
    }
    return out;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"weights", "fcr", "baxter", "invariance", "reduction"};
    return names;
}

LatticeSpec figure1_fixture() {
    return figure1_spec({Rational(1, 3), Rational(2, 7), Rational(3, 11), Rational(5, 13)}, Rational(7, 3));
}

LatticeSpec init8_fixture() {
    return initial_spec({false, true, true, true}, {Rational(1, 3), Rational(2, 7), Rational(3, 11), Rational(5, 13)},
                        Rational(7, 3));
}

SuiteResult run_suite(const std::string& name, std::size_t draws, std::uint64_t seed) {
    if (name == "weights") {
        return run_draws(name, draws, seed, [](std::size_t, Sampler& s, Recorder& r) { weights_draw(s, r); });
    }
    if (name == "fcr") {
        return run_draws(name, draws, seed, [](std::size_t i, Sampler& s, Recorder& r) { fcr_draw(s, r, 1 + i % 2); });
    }
    if (name == "baxter") {
        return run_draws(name, draws, seed,
                         [](std::size_t i, Sampler& s, Recorder& r) { baxter_draw(s, r, 1 + i % 4); });
    }
    if (name == "invariance") {
        const auto fixtures = fixture_states();
        return run_draws(name, draws, seed, [&](std::size_t i, Sampler& s, Recorder& r) {
            invariance_draw(s, r, 1 + i % 3, fixtures);
        });
    }
    if (name == "reduction") {
        return run_draws(name, draws, seed, [](std::size_t i, Sampler& s, Recorder& r) {
            reduction_draw(s, r, 2 + (i / 2) % 2, i % 2 == 0);
        });
    }
    throw InvalidSpec("unknown suite \"" + name + "\"");
}

std::vector<SuiteResult> run_suites(const std::string& name, std::size_t draws, std::uint64_t seed) {
    std::vector<SuiteResult> out;
    if (name == "all") {
        for (const auto& n : suite_names()) {
            out.push_back(run_suite(n, draws, seed));
        }
    } else {
        out.push_back(run_suite(name, draws, seed));
    }
    return out;
}

} // namespace bpba
