#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <string>

namespace turan {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
  BigInt r = 1, b = base;
  while (exp > 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

inline BigInt big_pow(long long base, unsigned exp) { return big_pow(BigInt(base), exp); }

inline bool fits_int64(const BigInt& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

inline double big_to_double(const BigInt& v) { return v.convert_to<double>(); }

inline std::string big_to_string(const BigInt& v) { return v.str(); }

inline BigInt binomial2(const BigInt& d) { return d * (d - 1) / 2; }

}  // namespace turan
