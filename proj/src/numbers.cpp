#include "blattice/numbers.hpp"

#include <stdexcept>

namespace blattice {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) { return binomial_big(BigInt(n), k); }

BigInt binomial_big(const BigInt& n, int k) {
  if (k < 0) return 0;
  if (n >= 0 && n < k) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;  // exact: k! divides any product of k consecutive integers
}

BigInt double_factorial_even(int m) {
  if (m < 0 || m % 2 != 0)
    throw std::invalid_argument("double_factorial_even: argument must be even and >= 0");
  const int k = m / 2;
  return (BigInt(1) << k) * factorial(k);
}

BigInt falling_factorial(const BigInt& x, int n) {
  if (n < 0) throw std::invalid_argument("falling_factorial: negative length");
  BigInt r = 1;
  for (int i = 0; i < n; ++i) r *= x - i;
  return r;
}

BigRat falling_factorial(const BigRat& x, int n) {
  if (n < 0) throw std::invalid_argument("falling_factorial: negative length");
  BigRat r = 1;
  for (int i = 0; i < n; ++i) r *= x - i;
  return r;
}

BigInt pow_int(const BigInt& x, int e) {
  if (e < 0) throw std::invalid_argument("pow_int: negative exponent");
  BigInt r = 1;
  BigInt b = x;
  int m = e;
  while (m > 0) {
    if (m & 1) r *= b;
    b *= b;
    m >>= 1;
  }
  return r;
}

BigInt floor_rat(const BigRat& q) {
  BigInt num = numerator(q);
  BigInt den = denominator(q);  // den > 0 in canonical form
  BigInt t = num / den;         // truncates toward zero
  if (num < 0 && t * den != num) --t;
  return t;
}

BigInt ceil_rat(const BigRat& q) { return -floor_rat(-q); }

std::string decimal_string(const BigRat& q, int digits) {
  const bool neg = q < 0;
  BigRat a = neg ? BigRat(-q) : q;
  BigInt ip = floor_rat(a);
  BigRat frac = a - BigRat(ip);
  std::string out = (neg ? "-" : "") + ip.str();
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      frac *= 10;
      BigInt d = floor_rat(frac);
      out += static_cast<char>('0' + d.convert_to<int>());
      frac -= BigRat(d);
    }
  }
  return out;
}

}  // namespace blattice
