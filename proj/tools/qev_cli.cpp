#include "qev/cli.hpp"

int main(int argc, char** argv) { return qev::cli::run(argc, argv); }
