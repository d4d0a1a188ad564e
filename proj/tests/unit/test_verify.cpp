#include <doctest.h>

#include <cstdlib>

#include "bpba/error.hpp"
#include "bpba/parallel.hpp"
#include "bpba/verify.hpp"

using namespace bpba;

TEST_CASE("every suite passes a few draws") {
    for (const auto& name : suite_names()) {
        const SuiteResult r = run_suite(name, 4, 2024);
        INFO(name);
        CHECK(r.ok());
        CHECK(r.draws == 4);
        CHECK(r.checks > 0);
    }
    CHECK_THROWS_AS(run_suite("nope", 1, 1), InvalidSpec);
    CHECK(run_suites("all", 1, 3).size() == suite_names().size());
}

TEST_CASE("draws are reproducible") {
    const SuiteResult a = run_suite("weights", 5, 99);
    const SuiteResult b = run_suite("weights", 5, 99);
    CHECK(a.checks == b.checks);
    CHECK(a.redraws == b.redraws);
}

TEST_CASE("thread cap and parallel loop") {
    setenv("BPBA_THREADS", "3", 1);
    CHECK(thread_count() == 3);
    std::vector<int> out(50);
    parallel_for(out.size(), [&](std::size_t i) { out[i] = static_cast<int>(i * i); });
    for (std::size_t i = 0; i < out.size(); ++i) {
        CHECK(out[i] == static_cast<int>(i * i));
    }
    CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                        if (i == 7) {
                            throw PoleError("x");
                        }
                    }),
                    PoleError);
    setenv("BPBA_THREADS", "junk", 1);
    CHECK(thread_count() >= 1);
    unsetenv("BPBA_THREADS");
}
