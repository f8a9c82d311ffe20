#pragma once

#include <string>

#include "iex/iet.hpp"

namespace iex {

/// Builds a transformation from the JSON description
///   {"d": 5, "alphabet": ["a","b","c"], "order2": ["b","c","a"],
///    "origin": "0", "lengths": {"a": "-2 + sqrt(5)", ...}}
/// where origin and lengths use the field expression grammar.
Iet parse_iet_spec(const std::string& text);

Iet load_iet_spec(const std::string& path);

/// Canonical rendering; parse_iet_spec is a left inverse and serialized
/// specs round-trip byte for byte.
std::string serialize_iet_spec(const Iet& T);

}  // namespace iex
