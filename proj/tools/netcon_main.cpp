#include "netcon/cli.hpp"

int main(int argc, char** argv) { return netcon::cli_main(argc, argv); }
