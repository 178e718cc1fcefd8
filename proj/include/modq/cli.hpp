#pragma once

#include <ostream>

namespace modq::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kComputation = 3,
    kParse = 4,
    kNotModular = 5,
};

/// Entry point behind the modq executable; writes to out/err instead of the
/// process streams so tests can drive it.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace modq::cli
