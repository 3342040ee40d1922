#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <iostream>

#include "test_support.hpp"

int main(int argc, char** argv) {
  gal::testing::consume_seed_flag(argc, argv);
  std::cout << "seed " << gal::testing::seed() << "\n";
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
