#include "rcc11/cli.hpp"

int main(int argc, char** argv) { return rcc11::cli::run(argc, argv); }
