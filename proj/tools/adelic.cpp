#include "adelic/io/cli.hpp"

int main(int argc, char** argv) { return adelic::run(argc, argv, std::cout, std::cerr); }
