#include "augtwist/cli.hpp"

int main(int argc, char** argv) { return augtwist::run_cli(argc, argv); }
