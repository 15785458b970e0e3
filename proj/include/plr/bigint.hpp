#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace plr {

// Group orders grow as products of factorials; 64 bits overflow at 21!.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace plr
