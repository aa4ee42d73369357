#include "leecodes/cli.hpp"

int main(int argc, char** argv) { return leecodes::cli::run(argc, argv); }
