#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liftline {

/// Command-line entry point, stream-parameterized so tests can drive it
/// in-process. Exit codes: 0 success / check true, 1 check false or not
/// isomorphic, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace liftline
