#pragma once

#include <ostream>

namespace scherk::cli {

// Stable exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitConvergence = 3;

/// Entry point of the scherk command line tool, usable in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace scherk::cli
