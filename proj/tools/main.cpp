#include "cli.hpp"

int main(int argc, char** argv) { return pellsq::cli::run_cli(argc, argv); }
