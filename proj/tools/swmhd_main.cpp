#include "swmhd/cli.hpp"

int main(int argc, char** argv) { return swmhd::cli_main(argc, argv); }
