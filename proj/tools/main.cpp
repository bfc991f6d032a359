#include "cli.hpp"

int main(int argc, char** argv) { return lietower::cli::run(argc, argv, std::cout, std::cerr); }
