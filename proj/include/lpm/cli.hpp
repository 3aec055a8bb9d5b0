#pragma once

#include <ostream>

namespace lpm {

/// Runs the lpm command line. Exit codes: 0 success, 1 a check ran and
/// failed, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lpm
