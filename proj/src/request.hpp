#pragma once

#include <string>

namespace euclid8 {

// Executes one JSON request document and produces the JSON response.
// exit_code classifies the outcome: 0 ok, 2 parse error, 3 math error,
// 4 verification failure (1 for unexpected internal errors). A response
// document is produced in every case; error_kind/message are filled on
// failure.
struct RunOutcome {
    std::string response_json;
    int exit_code = 0;
    std::string error_kind;
    std::string message;
};

RunOutcome run_request(const std::string& request_json);

} // namespace euclid8
