#include <iostream>

#include "oddctl/commands.hpp"

int main(int argc, char** argv) { return odd::cli::run(argc, argv, std::cout, std::cerr); }
