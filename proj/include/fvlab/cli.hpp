#pragma once

#include <string>
#include <vector>

#include "fvlab/caps.hpp"

namespace fvlab::cli {

enum ExitCode : int { kSuccess = 0, kNegative = 1, kInputError = 2, kCapExceeded = 3 };

struct Outcome {
    int exit_code = kSuccess;
    std::string out;  // one JSON document, newline-terminated
    std::string err;  // diagnostics
};

/// Runs one command; `args` excludes the program name.
Outcome run(const std::vector<std::string>& args, const Caps& caps = Caps{});

}  // namespace fvlab::cli
