#include "oscpoly/cli.hpp"

int main(int argc, char** argv) { return oscpoly::cli::run_cli(argc, argv); }
