#ifndef PADLIFT_BIGINT_HPP_
#define PADLIFT_BIGINT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace padlift {

using Int = boost::multiprecision::cpp_int;

/// Canonical representative of x modulo m in [0, m).
Int mod_reduce(const Int& x, const Int& m);

/// x^k mod m for k >= 0.
Int mod_pow(Int x, Int k, const Int& m);

/// Inverse of x modulo m (extended Euclid); throws std::invalid_argument if
/// gcd(x, m) != 1.
Int mod_inverse(const Int& x, const Int& m);

/// Number of times p divides x; returns `cap` for x == 0.
long long p_valuation(Int x, const Int& p, long long cap);

/// Deterministic-enough primality check (Miller-Rabin, fixed seed).
bool is_prime(const Int& n);

Int pow_int(Int base, long long k);

std::string to_decimal(const Int& x);
Int from_decimal(const std::string& s);

}  // namespace padlift

#endif  // PADLIFT_BIGINT_HPP_
