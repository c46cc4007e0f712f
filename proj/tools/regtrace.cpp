#include "cli/commands.hpp"

int main(int argc, char** argv) { return regtrace::cli::run(argc, argv); }
