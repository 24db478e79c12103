#include "ctdesign/cli.hpp"

int main(int argc, char** argv) { return ctd::cli::run(argc, argv); }
