#pragma once

#include <iosfwd>

namespace pnw::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
};

/// Entry point of the pnwgen tool. Words stream to `out`, one per line.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pnw::cli
