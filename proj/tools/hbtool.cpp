#include "hb/cli.hpp"

int main(int argc, char** argv) { return hb::run_cli(argc, argv); }
