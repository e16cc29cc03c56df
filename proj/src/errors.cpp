#include "errors.hpp"

namespace euclid8 {

const char* errkind_name(errkind k) {
    switch (k) {
    case errkind::parse_error: return "ParseError";
    case errkind::bad_request: return "BadRequest";
    case errkind::singular_matrix: return "SingularMatrix";
    case errkind::division_by_zero: return "DivisionByZero";
    case errkind::field_mismatch: return "FieldMismatch";
    case errkind::both_zero: return "BothZero";
    case errkind::not_divisible: return "NotDivisible";
    case errkind::certificate_failure: return "CertificateFailure";
    case errkind::base_not_found: return "BaseNotFound";
    case errkind::verification_failed: return "VerificationFailed";
    }
    return "UnknownError";
}

int errkind_exit_code(errkind k) {
    switch (k) {
    case errkind::parse_error:
    case errkind::bad_request:
        return 2;
    case errkind::singular_matrix:
    case errkind::division_by_zero:
    case errkind::field_mismatch:
    case errkind::both_zero:
    case errkind::not_divisible:
        return 3;
    case errkind::certificate_failure:
    case errkind::base_not_found:
    case errkind::verification_failed:
        return 4;
    }
    return 1;
}

} // namespace euclid8
