#include "latlab_cli/cli.hpp"

int main(int argc, char** argv) { return latlab::cli::main_entry(argc, argv); }
