#include "tkk/cli.hpp"

int main(int argc, char** argv) { return tkk::cli::main(argc, argv); }
