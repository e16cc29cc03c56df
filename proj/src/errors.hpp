#pragma once

#include <stdexcept>
#include <string>

namespace euclid8 {

// Stable error kinds. The C API and the CLI map these onto exit codes:
// parse errors -> 2, math errors -> 3, verification/certificate errors -> 4.
enum class errkind {
    parse_error,
    bad_request,
    singular_matrix,
    division_by_zero,
    field_mismatch,
    both_zero,
    not_divisible,
    certificate_failure,
    base_not_found,
    verification_failed,
};

const char* errkind_name(errkind k);

// 2 = parse, 3 = math, 4 = verification.
int errkind_exit_code(errkind k);

class error : public std::runtime_error {
public:
    error(errkind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    errkind kind() const { return kind_; }

private:
    errkind kind_;
};

[[noreturn]] inline void fail(errkind kind, const std::string& msg) {
    throw error(kind, msg);
}

} // namespace euclid8
