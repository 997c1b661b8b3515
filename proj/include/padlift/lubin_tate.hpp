#ifndef PADLIFT_LUBIN_TATE_HPP_
#define PADLIFT_LUBIN_TATE_HPP_

#include <vector>

#include "padlift/lift_check.hpp"
#include "padlift/series.hpp"

namespace padlift {

/// A Frobenius power series for the formal-group machinery: f(0) = 0,
/// f'(0) = pi * unit (valuation exactly one), and f = T^q mod the maximal
/// ideal. Constructed through make_frobenius so the properties are checked
/// once and then trusted.
struct FrobeniusSeries {
  PadicField field;
  TruncSeries series;
};

FrobeniusSeries make_frobenius(TruncSeries f);

/// The standard choice pi*T + T^q, truncated to M terms.
FrobeniusSeries default_frobenius(const PadicField& k, long long M);

/// Builds a field whose working precision leaves room for the M - 2 unit
/// divisions by (pi - pi^{n+1}) that the degree-by-degree solve performs.
PadicField make_lt_field(const Int& p, long long f, long long e,
                         const std::vector<Int>& unram_poly,
                         const std::vector<std::vector<Int>>& eis_poly,
                         long long N, long long M);

/// The unique F with F(0) = 0, F'(0) = a and f(F(T)) = F(g(T)), solved one
/// coefficient at a time; a must be integral. Result window = min(window of
/// f, g) and the trailing coefficients carry whatever precision survives
/// the divisions (PrecisionExhausted if any claim is consumed entirely).
TruncSeries lt_unique_series(const FrobeniusSeries& f, const FrobeniusSeries& g,
                             const PadicElem& a);

/// [a] = the endomorphism with linear coefficient a: lt_unique_series(f, f, a).
TruncSeries lt_endomorphism(const FrobeniusSeries& f, const PadicElem& a);

/// Assembles a checkable spec from a list of unit multipliers: one element
/// [a] per entry, with a product row for every pair whose product is again
/// in the list. Labels are the decimal values of the multipliers.
LiftSpec lubin_tate_lift(const FrobeniusSeries& f, const std::vector<Int>& units);

/// The cyclotomic instance over Q_p: P = (1+T)^p - 1 and F_c = (1+T)^c - 1
/// for each unit exponent c, both truncated to M terms. The field must be
/// unramified of residue degree one (O_E = Z_p).
LiftSpec cyclotomic_lift(const PadicField& k, const std::vector<Int>& exponents,
                         long long M);

}  // namespace padlift

#endif  // PADLIFT_LUBIN_TATE_HPP_
