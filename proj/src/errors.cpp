#include "sentlab/errors.hpp"

namespace sentlab {

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ConfigError*>(&e)) return static_cast<int>(ExitCode::usage);
    if (dynamic_cast<const IoError*>(&e)) return static_cast<int>(ExitCode::io);
    if (dynamic_cast<const DataError*>(&e)) return static_cast<int>(ExitCode::data);
    if (dynamic_cast<const BackendError*>(&e)) return static_cast<int>(ExitCode::backend);
    if (dynamic_cast<const ParseError*>(&e)) return static_cast<int>(ExitCode::parse);
    return static_cast<int>(ExitCode::internal);
}

}  // namespace sentlab
