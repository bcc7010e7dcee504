#include "chirality/cli.hpp"

int main(int argc, char** argv) { return chirality::cli::run(argc, argv); }
