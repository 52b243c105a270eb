#include <iostream>

#include "lvt/cli/cli.hpp"

int main(int argc, char** argv) { return lvt::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr); }
