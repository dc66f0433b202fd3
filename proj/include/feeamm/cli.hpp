#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace feeamm::cli {

enum ExitCode : int {
    kSuccess = 0,
    kValidationFailure = 1,
    kDisabledTransaction = 2,
    kVerificationFailure = 3,
};

// Entry point shared by the feeamm executable and the tests. args excludes
// the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace feeamm::cli
