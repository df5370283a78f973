#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sl2pf {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(BigInt a, BigInt b) { return boost::multiprecision::gcd(a, b); }

// Smallest x in [1, m] with a*x ≡ 1 (mod m); requires gcd(a, m) = 1 and m >= 1.
BigInt big_modinv(const BigInt& a, const BigInt& m);

// q^d with small bases; d >= 0.
BigInt big_pow(long base, long exp);

}  // namespace sl2pf
