// SPDX-License-Identifier: Apache-2.0
//
// JSON serialization for the public object kinds exposed by the CLI.
//
// Conventions (shared with the CLI contract):
//   * every numeric value is rendered as a decimal string, so output is
//     independent of machine word size and safe for exact big integers;
//   * objects use nlohmann::json's default std::map backing, which keeps
//     keys sorted and therefore makes serialized output byte-stable.

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "stringcone/cartan.hpp"
#include "stringcone/cluster.hpp"
#include "stringcone/cones.hpp"
#include "stringcone/posrat.hpp"

namespace stringcone {

using Json = nlohmann::json;

// Decimal-string renderings of the numeric types used in serialized output.
std::string dec_string(const BigInt& v);
std::string dec_string(long long v);
std::string dec_string(const Rat& v);

Json to_json(const Space& space);
Json to_json(const PosPoly& poly);
Json to_json(const PosRat& value);
Json to_json(const RationalMap& map);
Json to_json(const TropForm& form);
Json to_json(const TropMap& map);
Json to_json(const ConeH& cone);
Json to_json(const CartanMatrix& cartan);
Json to_json(const Seed& seed);
Json quiver_to_json(const Seed& seed);
Json to_json(const IntMat& matrix);

// Error payload used by the CLI on failure:
//   {"error": {"message": <text>, "type": <error class>}}
Json error_json(const std::string& type, const std::string& message);

} // namespace stringcone
