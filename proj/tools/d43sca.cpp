#include "app.hpp"

int main(int argc, char** argv) { return d43::cli::run(argc, argv, std::cout, std::cerr); }
