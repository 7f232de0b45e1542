#include <iostream>
#include <string>
#include <vector>

#include "cli.h"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    qec::cli::CommandOutcome out = qec::cli::run(args, std::cin);
    std::ostream &os = out.exit_code == qec::cli::kUsageError && !out.json_output ? std::cerr : std::cout;
    os << out.rendered();
    return out.exit_code;
}
