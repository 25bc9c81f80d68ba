#include "hadamard/cli/commands.hpp"

int main(int argc, char** argv) { return hadamard::cli::run(argc, argv); }
