#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gimel/errors.hpp"

namespace gimel::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kValidationFailure = 2;
inline constexpr int kDecompositionFailure = 3;

int exit_code(ErrorKind kind);

// Runs the command line (args[0] is the program name). Results go to `out`,
// machine-readable errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Hex SHA-256 of a string, used for cache keys.
std::string sha256_hex(const std::string& data);

}  // namespace gimel::cli
