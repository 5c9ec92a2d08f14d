#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace odla::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotAlgebra = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kReportSchemaVersion = 1;

/// Runs one command line (args exclude the program name). Documents named
/// "-" or omitted are read from `in`. Returns 0, 1 or 2.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace odla::cli
