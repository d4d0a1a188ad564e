#include "bpba/serialize.hpp"

#include <fstream>

#include "bpba/error.hpp"

namespace bpba {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) {
        throw ParseError(std::string("field \"") + key + "\" must be an integer");
    }
    return v.get<int>();
}

std::vector<int> labels(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_array()) {
        throw ParseError(std::string("field \"") + key + "\" must be an array");
    }
    std::vector<int> out;
    for (const auto& e : v) {
        if (!e.is_number_integer() || (e.get<int>() != 1 && e.get<int>() != 2)) {
            throw ParseError(std::string("entries of \"") + key + "\" must be 1 or 2");
        }
        out.push_back(e.get<int>());
    }
    return out;
}

} // namespace

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) {
        throw ParseError("rational values are strings of the form \"p/q\"");
    }
    return Rational::parse(j.get<std::string>());
}

Json to_json(const LatticeSpec& spec) {
    Json lines = Json::array();
    for (std::size_t k = 0; k < spec.n_lines(); ++k) {
        lines.push_back({{"start", spec.chords[k].start},
                         {"end", spec.chords[k].end},
                         {"reflected", static_cast<bool>(spec.reflected[k])},
                         {"rapidity", spec.rapidities[k].str()}});
    }
    return {{"n", spec.n_lines()}, {"lines", lines}, {"q", spec.q.str()}};
}

LatticeSpec spec_from_json(const Json& j) {
    const int n = int_field(j, "n");
    const Json& lines = field(j, "lines");
    if (!lines.is_array()) {
        throw ParseError("field \"lines\" must be an array");
    }
    if (n < 1 || static_cast<std::size_t>(n) != lines.size()) {
        throw ParseError("\"n\" must equal the number of lines (got n=" + std::to_string(n) + ", " +
                         std::to_string(lines.size()) + " lines)");
    }
    LatticeSpec spec;
    for (const auto& line : lines) {
        spec.chords.push_back(Chord{int_field(line, "start"), int_field(line, "end")});
        const Json& refl = field(line, "reflected");
        if (!refl.is_boolean()) {
            throw ParseError("field \"reflected\" must be a boolean");
        }
        spec.reflected.push_back(refl.get<bool>());
        spec.rapidities.push_back(rational_from_json(field(line, "rapidity")));
    }
    spec.q = rational_from_json(field(j, "q"));
    return spec;
}

Json to_json(const ExternalConfig& config) { return {{"alpha", config.alpha}, {"beta", config.beta}}; }

ExternalConfig config_from_json(const Json& j) {
    ExternalConfig c{labels(j, "alpha"), labels(j, "beta")};
    if (c.alpha.size() != c.beta.size()) {
        throw ParseError("\"alpha\" and \"beta\" must have the same length");
    }
    return c;
}

Json to_json(const QuantumState& state) {
    Json comps = Json::array();
    for (std::size_t i = 0; i < state.vector.dim(); ++i) {
        if (!state.vector[i].is_zero()) {
            comps.push_back({{"basis", basis_string(i, state.chain_length)}, {"value", state.vector[i].str()}});
        }
    }
    return {{"L", state.chain_length}, {"components", comps}};
}

QuantumState state_from_json(const Json& j) {
    const int L = int_field(j, "L");
    if (L < 0 || L > 24) {
        throw ParseError("\"L\" out of range");
    }
    const Json& comps = field(j, "components");
    if (!comps.is_array()) {
        throw ParseError("field \"components\" must be an array");
    }
    QuantumState s(L);
    for (const auto& c : comps) {
        const Json& b = field(c, "basis");
        if (!b.is_string() || b.get<std::string>().size() != static_cast<std::size_t>(L)) {
            throw ParseError("basis label must be a string of length L");
        }
        std::vector<int> lab;
        for (char ch : b.get<std::string>()) {
            if (ch != '1' && ch != '2') {
                throw ParseError("basis labels consist of 1 and 2");
            }
            lab.push_back(ch - '0');
        }
        s.vector[basis_index(lab)] = rational_from_json(field(c, "value"));
    }
    return s;
}

Json to_json(const MoveSequence& plan) {
    Json moves = Json::array();
    for (const auto& m : plan.moves) {
        moves.push_back({{"p", m.p}, {"arg", m.arg.str()}});
    }
    return {{"moves", moves}};
}

std::vector<Move> moves_from_json(const Json& j) {
    const Json& moves = field(j, "moves");
    if (!moves.is_array()) {
        throw ParseError("field \"moves\" must be an array");
    }
    std::vector<Move> out;
    for (const auto& m : moves) {
        out.push_back(Move{int_field(m, "p"), rational_from_json(field(m, "arg"))});
    }
    return out;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot read " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

LatticeSpec read_spec_file(const std::filesystem::path& path) { return spec_from_json(read_json_file(path)); }

} // namespace bpba
