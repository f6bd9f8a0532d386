#include <iostream>

#include "regretforge/acceptance.hpp"

int main() {
    return regretforge::acceptance::report(std::cout, regretforge::acceptance::run_all()) ? 0 : 1;
}
