#include "netdrift/cli.hpp"

int main(int argc, char** argv) { return netdrift::cli_main(argc, argv); }
