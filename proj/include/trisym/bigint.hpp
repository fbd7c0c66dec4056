#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace trisym {

using BigInt = boost::multiprecision::cpp_int;
using Rat64 = boost::rational<long long>;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

}  // namespace trisym
