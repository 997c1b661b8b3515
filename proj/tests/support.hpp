// Shared helpers for the test suites: deterministic generators and
// independent oracles that recompute library results through a different
// route (rational arithmetic, naive algorithms, brute-force search).
#ifndef PADLIFT_TESTS_SUPPORT_HPP_
#define PADLIFT_TESTS_SUPPORT_HPP_

#include <random>
#include <vector>

#include "padlift/bigint.hpp"
#include "padlift/error.hpp"
#include "padlift/padic.hpp"
#include "padlift/series.hpp"

namespace testsupport {

using padlift::Int;
using padlift::PadicElem;
using padlift::PadicField;

inline std::mt19937_64 make_rng(unsigned long long seed) {
  return std::mt19937_64(seed);
}

inline Int rand_below(std::mt19937_64& rng, const Int& bound) {
  // Uniform enough for test data: stitch 32-bit words and reduce.
  Int x = 0;
  size_t words = (padlift::to_decimal(bound).size() / 9) + 2;
  for (size_t i = 0; i < words; ++i) {
    x <<= 32;
    x += static_cast<unsigned>(rng());
  }
  return padlift::mod_reduce(x, bound);
}

inline PadicElem rand_elem(std::mt19937_64& rng, const PadicField& k) {
  std::vector<Int> c(static_cast<size_t>(k.f()) * k.e());
  for (auto& x : c) x = rand_below(rng, k.base_modulus());
  return k.from_coords(std::move(c), k.max_prec());
}

inline PadicElem rand_unit(std::mt19937_64& rng, const PadicField& k) {
  for (;;) {
    PadicElem x = rand_elem(rng, k);
    if (valuation(x).is_zero_exact()) return x;
  }
}

// Exact integer binomial coefficient, by the multiplicative formula.
inline Int binom_int(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// Composition recomputed by explicit power accumulation (sum of f_k * g^k),
// the opposite association order from the library's Horner evaluation.
inline padlift::TruncSeries compose_naive(const padlift::TruncSeries& f,
                                          const padlift::TruncSeries& g) {
  const auto& k = f.field();
  long long W = std::min(f.len(), g.len());
  auto acc = padlift::TruncSeries::constant(f.coeff(0), W);
  auto gpow = padlift::TruncSeries::constant(k.one(), W);
  for (long long i = 1; i < f.len(); ++i) {
    gpow = gpow * g.truncated(W);
    acc = acc + gpow.mul_scalar(f.coeff(i));
  }
  return acc;
}

// First T-degree at which the series is certifiably nonzero, or -1.
inline long long first_certain_degree(const padlift::TruncSeries& s) {
  for (long long j = s.shift(); j < s.order_cap(); ++j)
    if (!valuation(s.coeff(j)).at_least) return j;
  return -1;
}

// Valuation recomputed by repeated exact division by the uniformizer (a
// different code path from the coordinate-minimum formula).
inline padlift::Valuation val_by_division(const PadicElem& x) {
  PadicElem cur = x;
  long long count = 0;
  while (count <= x.field().max_prec()) {
    try {
      cur = padlift::div_by_pi_power(cur, 1);
      ++count;
    } catch (const padlift::Error& err) {
      if (err.code() == padlift::Errc::NotDivisible)
        return padlift::Valuation::exact(count);
      if (err.code() == padlift::Errc::PrecisionExhausted)
        return padlift::Valuation::bound(x.prec());
      throw;
    }
  }
  return padlift::Valuation::bound(x.prec());
}

}  // namespace testsupport

#endif  // PADLIFT_TESTS_SUPPORT_HPP_
