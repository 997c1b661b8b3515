#ifndef PADLIFT_SERIES_HPP_
#define PADLIFT_SERIES_HPP_

#include <vector>

#include "padlift/padic.hpp"

namespace padlift {

/// Truncated Laurent series over O_E: T^shift * (c_0 + c_1 T + ...) with
/// len() stored coefficients, representing the series modulo T^order_cap()
/// (order_cap = shift + len). shift <= 0 gives a finite-tail Laurent
/// element; shift = 0 an ordinary power series. The T-adic structure is
/// exact; each coefficient carries its own varpi-adic precision claim.
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(PadicField field, long long shift, std::vector<PadicElem> coeffs);

  static TruncSeries zero(const PadicField& k, long long len);
  static TruncSeries constant(const PadicElem& c, long long len);
  /// The series T (identity under composition).
  static TruncSeries identity(const PadicField& k, long long len);
  /// Coefficients given as plain integers, shift 0.
  static TruncSeries from_ints(const PadicField& k, std::vector<Int> cs);

  const PadicField& field() const { return field_; }
  long long shift() const { return shift_; }
  long long len() const { return static_cast<long long>(coeffs_.size()); }
  long long order_cap() const { return shift_ + len(); }
  const std::vector<PadicElem>& coeffs() const { return coeffs_; }

  /// Coefficient of T^deg; exact zero below the shift, error at or above the
  /// truncation cap.
  PadicElem coeff(long long deg) const;

  /// Weakest reported coefficient precision (the series-level claim).
  long long min_reported_prec() const;
  std::vector<long long> coeff_precs() const;

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries operator-() const;

  TruncSeries mul_scalar(const PadicElem& c) const;
  /// Multiplication by the exact monomial T^k (shift bookkeeping only).
  TruncSeries mul_monomial(long long k) const;
  /// Keeps only the first `len` coefficients.
  TruncSeries truncated(long long len) const;
  /// Extends the window with exact zeros (claims nothing new: the added
  /// coefficients carry precision 0). Intended for aligning windows of
  /// series known to be polynomials; use with care.
  TruncSeries extended(long long len, long long added_prec) const;
  /// Caps every coefficient's precision claim.
  TruncSeries with_prec(long long prec) const;

  TruncSeries pow(long long k) const;

 private:
  PadicField field_;
  long long shift_ = 0;
  std::vector<PadicElem> coeffs_;
};

/// f(g(T)) for shift-0 series; requires val(g(0)) >= 1 certified. Horner
/// evaluation; per-coefficient claims account for the truncated tail of f
/// through val(g(0)).
TruncSeries compose(const TruncSeries& f, const TruncSeries& g);

/// Compositional inverse of f with f(0) = 0 and f'(0) a unit, by Newton
/// doubling; no precision loss (all divisions are by units).
TruncSeries comp_inverse(const TruncSeries& f);

/// Multiplicative inverse of a Laurent series whose lowest certain
/// coefficient is a unit; coefficients that are indistinguishable from zero
/// below it are dropped (consistent with their precision claims).
TruncSeries mul_inverse(const TruncSeries& f);

TruncSeries derivative(const TruncSeries& f);

/// f(T + a) for shift-0 f and val(a) >= 1; coefficient j carries claim
/// min(natural, (len-j) * val(a)).
TruncSeries taylor_shift(const TruncSeries& f, const PadicElem& a);

/// (1+T)^c - 1 with len coefficients, via the hypergeometric-style
/// recurrence C(c,k) = C(c,k-1)(c-k+1)/k. Throws NotDivisible if the
/// coefficients are not integral (c outside Z_p in a ramified field).
TruncSeries binomial_series(const PadicElem& c, long long len);

/// f(x) for an element with val(x) >= 1 (or any x if f is stored as a
/// polynomial with exact tail); claim accounts for the truncated tail.
PadicElem evaluate(const TruncSeries& f, const PadicElem& x);

/// val(a-b) >= t for every coefficient over the joint window.
bool series_eq_at(const TruncSeries& a, const TruncSeries& b, long long t);
/// Minimum over the difference's coefficients of the valuation lower bound.
long long series_diff_val(const TruncSeries& a, const TruncSeries& b);

// ---- residue series over k_E ----

struct ResidueSeries {
  PadicField field;  // supplies the residue-field structure
  long long shift = 0;
  std::vector<ResidueElem> coeffs;

  long long len() const { return static_cast<long long>(coeffs.size()); }
};

ResidueSeries reduce_mod_p(const TruncSeries& f);
ResidueSeries res_series_mul(const ResidueSeries& a, const ResidueSeries& b);
/// Composition of shift-0 residue series with g(0) = 0.
ResidueSeries res_series_compose(const ResidueSeries& f,
                                 const ResidueSeries& g);
bool res_series_eq(const ResidueSeries& a, const ResidueSeries& b);
/// True when f = c * T^d over the stored window.
bool res_series_is_monomial(const ResidueSeries& f, long long d,
                            const ResidueElem& c);

}  // namespace padlift

#endif  // PADLIFT_SERIES_HPP_
