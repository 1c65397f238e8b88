#include "oldroyd_cli/commands.hpp"

int main(int argc, char** argv) { return oldroyd::cli::main_entry(argc, argv); }
