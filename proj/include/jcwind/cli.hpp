// cli.hpp — command-line front end
//
// Exit codes: 0 success, 1 computation error, 2 usage error, 3 verify failure.

#pragma once

#include <iosfwd>

namespace jcwind {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kInterfaceVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerify = 3;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jcwind
