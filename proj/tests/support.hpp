#ifndef POLYZ_TESTS_SUPPORT_HPP
#define POLYZ_TESTS_SUPPORT_HPP

#include "polyz/word.hpp"

#include <cstdint>
#include <random>

namespace polyz::test {

inline std::mt19937_64 &rng()
{
  static std::mt19937_64 gen(20261016);
  return gen;
}

inline long long uniform(long long lo, long long hi)
{
  return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

inline NormalWord random_word(std::size_t n, long long bound)
{
  NormalWord w(n);
  for (std::size_t i = 0; i < n; ++i)
    w[i] = uniform(-bound, bound);
  return w;
}

} // namespace polyz::test

#endif
