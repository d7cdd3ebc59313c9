#include <evw/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
    return evw::cli::run(argc, argv, std::cout, std::cerr);
}
