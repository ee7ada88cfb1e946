#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace blattice {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt binomial_big(const BigInt& n, int k);

/// (m)!! for even m >= 0, i.e. 2 * 4 * ... * m = 2^(m/2) * (m/2)!.
/// Throws std::invalid_argument for odd or negative m.
BigInt double_factorial_even(int m);

/// Falling factorial x * (x-1) * ... * (x-n+1); (x)_0 = 1.
BigInt falling_factorial(const BigInt& x, int n);
BigRat falling_factorial(const BigRat& x, int n);

/// x^e for integer e >= 0, with 0^0 = 1.
BigInt pow_int(const BigInt& x, int e);

BigInt floor_rat(const BigRat& q);
BigInt ceil_rat(const BigRat& q);

/// Fixed-point decimal rendering of a rational, truncated toward zero.
std::string decimal_string(const BigRat& q, int digits);

}  // namespace blattice
