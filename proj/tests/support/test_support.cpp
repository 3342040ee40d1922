#include "test_support.hpp"

#include <cstdlib>
#include <cstring>

namespace gal::testing {

namespace {
constexpr std::uint64_t kDefaultSeed = 20240611;
std::uint64_t g_seed = kDefaultSeed;
}  // namespace

std::uint64_t seed() { return g_seed; }

void set_seed(std::uint64_t s) {
  g_seed = s;
  rng().seed(s);
}

std::mt19937_64& rng() {
  static std::mt19937_64 engine(kDefaultSeed);
  return engine;
}

void consume_seed_flag(int& argc, char** argv) {
  int out = 1;
  for (int k = 1; k < argc; ++k) {
    if (std::strcmp(argv[k], "--seed") == 0 && k + 1 < argc) {
      set_seed(std::strtoull(argv[++k], nullptr, 10));
    } else if (std::strncmp(argv[k], "--seed=", 7) == 0) {
      set_seed(std::strtoull(argv[k] + 7, nullptr, 10));
    } else {
      argv[out++] = argv[k];
    }
  }
  argc = out;
  argv[argc] = nullptr;
}

long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

Rational random_rational(long num_bound, long den_bound) {
  return Rational(uniform(-num_bound, num_bound), uniform(1, den_bound));
}

MultiPoly random_poly(const std::vector<std::string>& vars, int terms, unsigned max_degree) {
  MultiPoly p;
  int count = static_cast<int>(uniform(0, terms));
  for (int t = 0; t < count; ++t) {
    Monomial mono;
    unsigned budget = static_cast<unsigned>(uniform(0, max_degree));
    for (unsigned d = 0; d < budget; ++d) {
      mono = mono * Monomial::variable(vars[static_cast<std::size_t>(uniform(0, static_cast<long>(vars.size()) - 1))]);
    }
    p += MultiPoly::term(random_rational(), mono);
  }
  return p;
}

}  // namespace gal::testing
