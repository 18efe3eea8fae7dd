#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "grunsky/grunsky.hpp"

namespace grunsky {

using Json = nlohmann::ordered_json;

/// Serializes with floating-point numbers printed as full-precision decimal
/// (17 significant digits) so reports are reproducible and diffable.
/// Non-finite values become null.
void write_json_17(const Json& value, std::ostream& os, int indent = 2);
std::string dump_json_17(const Json& value, int indent = 2);

Json complex_to_json(Complex value);
Complex complex_from_json(const Json& value, const char* field);

/// Coefficient file format: {"b0": [re, im], "tail": [[re, im], ...]}.
Json laurent_map_to_json(const LaurentMap& map);
LaurentMap laurent_map_from_json(const Json& value);

LaurentMap read_laurent_map(const std::string& path);
void write_laurent_map(const LaurentMap& map, const std::string& path);

}  // namespace grunsky
