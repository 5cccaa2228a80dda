#pragma once

#include <stdexcept>
#include <string>

namespace sentlab {

// CLI exit codes, one per failure class.
enum class ExitCode : int {
    ok = 0,
    usage = 2,
    io = 3,
    data = 4,
    backend = 5,
    parse = 6,
    internal = 7,
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BackendError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse failures keep the offending payload for inspection.
struct ParseError : std::runtime_error {
    std::string raw;

    explicit ParseError(const std::string& msg, std::string raw_payload = {})
        : std::runtime_error(msg), raw(std::move(raw_payload)) {}
};

int exit_code_for(const std::exception& e);

}  // namespace sentlab
