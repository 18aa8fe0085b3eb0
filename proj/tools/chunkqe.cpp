#include "chunkqe/cli.hpp"

int main(int argc, char** argv) { return chunkqe::run_cli(argc, argv); }
