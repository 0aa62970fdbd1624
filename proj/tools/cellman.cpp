#include "cellman/cli.hpp"

int main(int argc, char** argv) { return cellman::run_cli(argc, argv); }
