#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace {
  std::uint64_t the_seed = 20240601;
}

std::uint64_t brauer::testing::seed() {
  return the_seed;
}

// Accepts --seed=N or --seed N in addition to the doctest options.
int main(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    std::string const arg = argv[i];
    if (arg.rfind("--seed=", 0) == 0) {
      the_seed = std::strtoull(arg.c_str() + 7, nullptr, 10);
    } else if (arg == "--seed" && i + 1 < argc) {
      the_seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      rest.push_back(argv[i]);
    }
  }
  std::cout << "seed " << the_seed << '\n';
  doctest::Context context(static_cast<int>(rest.size()), rest.data());
  return context.run();
}
