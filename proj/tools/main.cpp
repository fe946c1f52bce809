#include "kdiff/io.hpp"

int main(int argc, char** argv) { return kdiff::cli_run(argc, argv); }
