#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kayles::cli {

enum Exit { kOk = 0, kDiscrepancy = 1, kUsage = 2, kBound = 3 };

/// Runs one command line (without the program name). Interactive play reads
/// moves from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace kayles::cli
