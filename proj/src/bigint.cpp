#include "padlift/bigint.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/random/mersenne_twister.hpp>

#include <stdexcept>

namespace padlift {

Int mod_reduce(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

Int mod_pow(Int x, Int k, const Int& m) {
  x = mod_reduce(x, m);
  Int acc = 1;
  while (k > 0) {
    if (bit_test(k, 0)) acc = acc * x % m;
    x = x * x % m;
    k >>= 1;
  }
  return acc;
}

Int mod_inverse(const Int& x, const Int& m) {
  // extended Euclid on (x mod m, m)
  Int a = mod_reduce(x, m), b = m;
  Int s0 = 1, s1 = 0;
  while (b != 0) {
    Int q = a / b;
    Int t = a - q * b;
    a = b;
    b = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (a != 1) throw std::invalid_argument("mod_inverse: not coprime");
  return mod_reduce(s0, m);
}

long long p_valuation(Int x, const Int& p, long long cap) {
  if (x == 0) return cap;
  long long v = 0;
  while (v < cap && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  boost::random::mt19937 rng(42u);
  return boost::multiprecision::miller_rabin_test(n, 32, rng);
}

Int pow_int(Int base, long long k) {
  Int acc = 1;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::string to_decimal(const Int& x) { return x.str(); }

Int from_decimal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bad integer literal");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("bad integer literal: " + s);
  return Int(s);
}

}  // namespace padlift
