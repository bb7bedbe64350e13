#pragma once

#include <iosfwd>

namespace mfr {

// Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mfr
