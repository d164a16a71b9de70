#pragma once

// Shared corpus generators for the test suites.

#include <random>
#include <string>
#include <vector>

#include "sesx/text.hpp"

namespace testutil {

// All strings over {a,b} of the given length.
inline std::vector<std::string> binary_strings(int len) {
  std::vector<std::string> out;
  out.reserve(std::size_t{1} << len);
  for (unsigned long long m = 0; m < (1ull << len); ++m) {
    std::string s(static_cast<std::size_t>(len), 'a');
    for (int i = 0; i < len; ++i)
      if (m & (1ull << i)) s[static_cast<std::size_t>(i)] = 'b';
    out.push_back(std::move(s));
  }
  return out;
}

inline unsigned char symbol(int v, int sigma) {
  return sigma <= 94 ? static_cast<unsigned char>(33 + v)
                     : static_cast<unsigned char>(1 + v);
}

inline std::string random_string(std::uint64_t seed, std::size_t len, int sigma) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, sigma - 1);
  std::string s;
  s.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    s.push_back(static_cast<char>(symbol(dist(rng), sigma)));
  return s;
}

}  // namespace testutil
