#include <chrono>
#include <iostream>

#include "trop/count.hpp"
#include "trop/hierarchy.hpp"

int main() {
    std::cout << "placeholder\n";
    return 0;
}
