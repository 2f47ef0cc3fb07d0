// jcwind.cpp — command-line entry point

#include <iostream>

#include "jcwind/cli.hpp"

int main(int argc, char** argv) {
    return jcwind::run_cli(argc, argv, std::cout, std::cerr);
}
