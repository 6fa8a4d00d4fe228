#include "commands.hpp"

int main(int argc, char** argv) { return fusebench::cli::run(argc, argv); }
