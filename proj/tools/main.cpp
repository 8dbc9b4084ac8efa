#include "hyperim/cli.hpp"

int main(int argc, char** argv) { return hyperim::cli_dispatch(argc, argv); }
