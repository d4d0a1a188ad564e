#include <doctest.h>

#include <filesystem>

#include "bpba/error.hpp"
#include "bpba/serialize.hpp"
#include "bpba/verify.hpp"

using namespace bpba;

#ifndef BPBA_FIXTURE_DIR
#define BPBA_FIXTURE_DIR "fixtures"
#endif

TEST_CASE("spec round trip") {
    const LatticeSpec fig = figure1_fixture();
    const Json j = to_json(fig);
    CHECK(j["n"] == 4);
    CHECK(j["lines"][0]["start"] == 8);
    CHECK(j["lines"][0]["rapidity"] == "1/3");
    CHECK(j["q"] == "7/3");
    CHECK(spec_from_json(j) == fig);
    CHECK(spec_from_json(Json::parse(j.dump())) == fig);
}

TEST_CASE("bundled fixtures") {
    const std::filesystem::path dir(BPBA_FIXTURE_DIR);
    CHECK(read_spec_file(dir / "figure1.json") == figure1_fixture());
    CHECK(read_spec_file(dir / "init8.json") == init8_fixture());
    CHECK(validate_spec(figure1_fixture()).ok);
    CHECK(is_initial(init8_fixture()));
}

TEST_CASE("schema errors") {
    CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"n": 1, "lines": []})")), ParseError);
    CHECK_THROWS_AS(spec_from_json(Json::parse(
                        R"({"n": 1, "lines": [{"start": 2, "end": 1, "reflected": 0, "rapidity": "1/3"}], "q": "2"})")),
                    ParseError);
    CHECK_THROWS_AS(spec_from_json(Json::parse(
                        R"({"n": 1, "lines": [{"start": 2, "end": 1, "reflected": true, "rapidity": 0.3}], "q": "2"})")),
                    ParseError);
    CHECK_THROWS_AS(spec_from_json(Json::parse(
                        R"({"n": 1, "lines": [{"start": 2, "end": 1, "reflected": true, "rapidity": "1/0"}], "q": "2"})")),
                    PoleError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/spec.json"), ParseError);
}

TEST_CASE("config, state and move round trips") {
    const ExternalConfig c{{1, 2}, {2, 1}};
    CHECK(config_from_json(to_json(c)) == c);
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"alpha": [1, 3], "beta": [1, 1]})")), ParseError);

    QuantumState s(3);
    s[basis_index({1, 2, 1})] = Rational(-2, 5);
    s[basis_index({2, 2, 2})] = Rational(7);
    const Json js = to_json(s);
    CHECK(js["components"].size() == 2);
    CHECK(js["components"][0]["basis"] == "121");
    CHECK(js["components"][0]["value"] == "-2/5");
    CHECK(state_from_json(js) == s);

    MoveSequence plan;
    plan.moves = {Move{3, Rational(-5, 7)}, Move{1, Rational(2)}};
    const Json jm = to_json(plan);
    CHECK(jm["moves"][0]["arg"] == "-5/7");
    CHECK(moves_from_json(jm) == plan.moves);
}
