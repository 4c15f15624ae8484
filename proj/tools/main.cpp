#include "sho/cli.hpp"

int main(int argc, char** argv) { return sho::run_cli(argc, argv); }
