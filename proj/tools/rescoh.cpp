#include <iostream>

#include "rescoh/frontend.hpp"

int main(int argc, char** argv) { return rescoh::run_cli(argc, argv, std::cout, std::cerr); }
