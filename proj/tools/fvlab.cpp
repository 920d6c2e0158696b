#include <iostream>
#include <string>
#include <vector>

#include "fvlab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    fvlab::Caps caps;
    try {
        caps = fvlab::Caps::from_environment();
    } catch (const std::exception& e) {
        std::cerr << "invalid FVLAB_CAPS: " << e.what() << "\n";
        return fvlab::cli::kInputError;
    }
    const fvlab::cli::Outcome outcome = fvlab::cli::run(args, caps);
    std::cout << outcome.out;
    std::cerr << outcome.err;
    return outcome.exit_code;
}
