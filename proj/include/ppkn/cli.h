#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ppkn::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kParseError = 3,
    kIoError = 4,
    kCapacity = 5,
};

/// Runs one command line (without the program name). File arguments of "-"
/// read from `in`; "-o -" or no -o writes to `out`.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace ppkn::cli
