#pragma once

#include "field.hpp"

#include <string>

namespace euclid8 {

inline constexpr int kFieldSchemaVersion = 1;

// Versioned JSON text format: rationals as "p/q" strings, matrices as
// row-major arrays, roots as integer arrays. Serialization is deterministic
// (sorted keys, canonical rationals) so cached builds are byte-identical.
std::string field_to_json(const FieldData& f, bool pretty = false);

// Parses, recomputes derived data and replays the certificate suite;
// throws parse_error / certificate_failure.
FieldData field_from_json(const std::string& text);

} // namespace euclid8
