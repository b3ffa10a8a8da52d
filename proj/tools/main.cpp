#include "hullpart/cli.hpp"

int main(int argc, char** argv) { return hullpart::cli_main(argc, argv); }
