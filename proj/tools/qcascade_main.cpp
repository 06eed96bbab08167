#include <iostream>

#include "qcascade/cli.hpp"

int main(int argc, char** argv) { return qcascade::run_cli(argc, argv, std::cout, std::cerr); }
