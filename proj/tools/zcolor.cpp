#include "zcolor/cli.hpp"

int main(int argc, char** argv) { return zcolor::cli::run_cli(argc, argv); }
