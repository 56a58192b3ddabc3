#include "matfunc/cli.hpp"

int main(int argc, char** argv) { return matfunc::run_cli(argc, argv); }
