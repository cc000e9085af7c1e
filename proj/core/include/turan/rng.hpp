#pragma once

#include <cstdint>
#include <random>

namespace turan {

// All randomness flows through std::mt19937_64, whose output sequence is
// fixed by the C++ standard, so seeds reproduce bit-exactly everywhere.
using Rng = std::mt19937_64;

// Uniform double in [0,1) from the top 53 bits of one draw.
inline double canonical53(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace turan
