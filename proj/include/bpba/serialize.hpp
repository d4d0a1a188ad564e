#pragma once

/**
 * @file serialize.hpp
 * @brief JSON forms of specs, configurations, states and move plans.
 *
 * Rationals are strings "p/q" (integers as "p"). Schema violations raise
 * ParseError; structural checks on the spec are left to validate_spec.
 */

#include <filesystem>

#include <json.hpp>

#include "bpba/contraction.hpp"
#include "bpba/lattice.hpp"
#include "bpba/quantum.hpp"

namespace bpba {

using Json = nlohmann::json;

Rational rational_from_json(const Json& j);

Json to_json(const LatticeSpec& spec);
LatticeSpec spec_from_json(const Json& j);

Json to_json(const ExternalConfig& config);
ExternalConfig config_from_json(const Json& j);

/// Nonzero components only, keyed by basis labels "s1s2…sL".
Json to_json(const QuantumState& state);
QuantumState state_from_json(const Json& j);

Json to_json(const MoveSequence& plan);
/// Only the move list; source and target are not part of the schema.
std::vector<Move> moves_from_json(const Json& j);

/// ParseError when the file is unreadable or not JSON.
Json read_json_file(const std::filesystem::path& path);
LatticeSpec read_spec_file(const std::filesystem::path& path);

} // namespace bpba
