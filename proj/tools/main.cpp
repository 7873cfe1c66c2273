#include <replpath/cli.hpp>

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return replpath::cli::run_command(args);
}
