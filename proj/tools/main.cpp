#include "tfac/cli.hpp"

int main(int argc, char** argv) { return tfac::cli::main_entry(argc, argv); }
