#include <iostream>

#include "qeuler/acceptance.hpp"

int main() {
  return qeuler::acceptance::run_all(std::cout) ? 0 : 1;
}
