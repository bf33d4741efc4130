#include <cstdlib>
#include <iostream>

#include "frobstrat/cli.hpp"

int main(int argc, char** argv) {
    std::optional<std::string> precision;
    if (const char* env = std::getenv("FROBSTRAT_PRECISION")) precision = env;
    return frobstrat::run_cli(argc, argv, std::cout, std::cerr, precision);
}
