#include "wavestab/cli.hpp"

int main(int argc, char** argv) { return wavestab::cli::run_cli(argc, argv); }
