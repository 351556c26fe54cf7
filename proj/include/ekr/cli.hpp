#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ekr {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs the command line tool on `args` (without the program name).
/// Exit codes: 0 property holds, 1 property fails, 2 input error,
/// 3 resource cap reached.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& data);

}  // namespace ekr
