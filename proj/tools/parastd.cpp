#include "parastd/cli.hpp"

int main(int argc, char** argv) { return parastd::cli::main(argc, argv); }
