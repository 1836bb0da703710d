#include "hsgraph_cli.hpp"

int main(int argc, char** argv) { return hsg::cli::run(argc, argv); }
