#include "cli_runner.hpp"

int main(int argc, char** argv) { return exsuper::cli::main_impl(argc, argv); }
