#include "fuzmet/cli.hpp"

int main(int argc, char** argv) { return fuzmet::run_cli(argc, argv); }
