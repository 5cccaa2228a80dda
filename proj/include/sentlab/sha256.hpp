#pragma once

#include <string>

namespace sentlab {

// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

// Digest of a file's contents; throws IoError if unreadable.
std::string sha256_file(const std::string& path);

}  // namespace sentlab
