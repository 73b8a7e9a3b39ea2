#pragma once

#include <iosfwd>

namespace pellsq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitViolations = 2;
inline constexpr int kExitUsage = 64;

/// Default thread count: PELLSQ_THREADS, else hardware concurrency.
unsigned default_threads();

int run_cli(int argc, char** argv);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace pellsq::cli
