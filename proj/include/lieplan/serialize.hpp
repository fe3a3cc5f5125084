#pragma once

// JSON forms shared by the library and the CLI. Rationals are strings
// ("p/q" in lowest terms, or "p"); objects keep a fixed field order so a
// parsed report re-serializes byte for byte.

#include <string>

#include "json.hpp"
#include "lieplan/momentmap.hpp"
#include "lieplan/oracle.hpp"
#include "lieplan/plancherel.hpp"

namespace lieplan {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"n": N, "entries": [["p/q", ...], ...]} with an N x N entry array.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

/// [{"kind":"ell2","a":"3/2"}, {"kind":"hyp2","c":"1"},
///  {"kind":"quad4","p":"1","q":"2"}, {"kind":"zero2"}]
Json to_json(const BlockSpec& spec);
BlockSpec block_spec_from_json(const Json& j);

Json to_json(const Witness& w);

std::string family_name(GroupFamily f);
GroupFamily parse_family(const std::string& name);

Json to_json(const SpaceSpec& space);
Json to_json(const LeviDescriptor& levi);
Json to_json(const SupportStratum& stratum);
Json to_json(const SupportReport& report);
SupportReport report_from_json(const Json& j);

Json to_json(const OracleReport& report);

/// Two-space indented dump with a trailing newline.
std::string canonical_dump(const Json& j);

/// Parses text, mapping JSON syntax and type errors to ParseError.
Json parse_json(const std::string& text);

}  // namespace lieplan
