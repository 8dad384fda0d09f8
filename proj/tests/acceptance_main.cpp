#include <iostream>

#include "fracml/acceptance_suite.hpp"

int main() { return fracml::acceptance_main(std::cout) == 0 ? 0 : 1; }
