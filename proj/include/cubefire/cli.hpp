#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubefire::cli {

/// Process exit codes.
enum Exit : int {
    kOk = 0,
    kInvalidInput = 1,
    kNegative = 2,      // verification failed or search found nothing
    kUndetermined = 3,  // step budget exhausted
};

/// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubefire::cli
