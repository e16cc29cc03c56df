#pragma once

#include "field.hpp"

namespace euclid8 {

// Reference-basis data derived from the field definition alone.
void build_tables(FieldId id, MultTable& table, Mat8Q& conj_P);

// Fills every derived member from the serialized ones.
void compute_derived(FieldData& f);

// Certificate suite shared by build_field and cache loading; throws
// certificate_failure. Skips the enumerative checks (root count is fixed by
// the stored list) but re-verifies every algebraic identity.
void validate_field(const FieldData& f);

} // namespace euclid8
