#include "padlift/lubin_log.hpp"

#include <utility>
#include <vector>

#include "padlift/error.hpp"

namespace padlift {

namespace {

// Value of a scaled coefficient times pi^extra, as an integral element.
// Requires shift + extra >= 0.
PadicElem unscale(const ScaledElem& a, long long extra) {
  return mul_by_exact_pi_power(a.unit, a.shift + extra);
}

}  // namespace

TruncSeries LogSeries::cleared() const {
  const long long L = len();
  PadicElem w = div_by_pi_power(pi1, pi1_val);  // unit part of pi1
  PadicElem wpow = w.pow(L - 1);
  std::vector<PadicElem> cs;
  cs.reserve(coeffs.size());
  for (long long k = 0; k < L; ++k)
    cs.push_back(unscale({coeffs[k].shift, coeffs[k].unit * wpow},
                         (L - 1) * pi1_val));
  return TruncSeries(field, 0, std::move(cs));
}

LogSeries logarithm(const TruncSeries& P, long long M) {
  const PadicField& k = P.field();
  if (P.shift() != 0)
    throw Error(Errc::BadInput, "logarithm needs an ordinary power series");
  if (M < 0) M = P.len();
  if (M < 2 || P.len() < 2)
    throw Error(Errc::BadInput, "window too small to read off P'(0)");

  Valuation v0 = valuation(P.coeff(0));
  if (!v0.at_least)
    throw Error(Errc::BadInput, "P must fix 0: constant term is nonzero");
  Valuation v1 = valuation(P.coeff(1));
  if (v1.at_least)
    throw Error(Errc::LinearCoefficientZero,
                "P'(0) is zero at the working precision");
  if (v1.v < 1)
    throw Error(Errc::BadInput, "P'(0) must be a nonunit for the recurrence");

  PadicElem pi1 = P.coeff(1);
  TruncSeries Pw = P.len() < M ? P.extended(M, k.max_prec()) : P.truncated(M);

  std::vector<PadicElem> pi_pows(M + 1, k.one());
  for (long long j = 1; j <= M; ++j) pi_pows[j] = pi_pows[j - 1] * pi1;

  // Work with b_k = pi1^{k-1} a_k, which stays integral:
  //   b_k (1 - pi1^{k-1}) = sum_{i<k} pi1^{k-1-i} x_{k,i} b_i,
  // where x_{k,i} = [T^k] P^i. Only the unit 1 - pi1^{k-1} is inverted.
  std::vector<TruncSeries> pows;
  pows.reserve(M);
  pows.push_back(Pw);
  std::vector<PadicElem> b(M, k.zero());
  if (M > 1) b[1] = k.one();
  for (long long n = 2; n < M; ++n) {
    pows.push_back(pows.back() * Pw);
    PadicElem s = k.zero();
    for (long long i = 1; i < n; ++i)
      s = s + pi_pows[n - 1 - i] * pows[i - 1].coeff(n) * b[i];
    PadicElem d = k.one() - pi_pows[n - 1];
    b[n] = s * invert(d);
    if (b[n].prec() <= 0)
      throw Error(Errc::PrecisionExhausted,
                  "logarithm coefficient lost all certified digits");
  }

  LogSeries out;
  out.field = k;
  out.pi1 = pi1;
  out.pi1_val = v1.v;
  out.coeffs.resize(M);
  out.coeffs[0] = {0, k.zero()};
  out.coeffs[1] = {0, k.one()};
  long long prec = out.coeffs[1].unit.prec();
  for (long long n = 2; n < M; ++n) {
    Valuation vb = valuation(b[n]);
    if (!vb.at_least)
      out.coeffs[n] = {(1 - n) * v1.v + vb.v, div_by_pi_power(b[n], vb.v)};
    else
      out.coeffs[n] = {(1 - n) * v1.v, b[n]};
    prec = std::min(prec, out.coeffs[n].unit.prec());
  }
  out.prec = prec;
  out.residual = eigen_check(out, Pw, pi1).residual;
  return out;
}

EigenReport eigen_check(const LogSeries& A, const TruncSeries& F,
                        const PadicElem& f1) {
  const long long L = A.len();
  TruncSeries Fw = F.len() < L ? F.extended(L, A.field.max_prec())
                               : F.truncated(L);
  TruncSeries Ab = A.cleared();
  TruncSeries diff = compose(Ab, Fw) - Ab.mul_scalar(f1);

  EigenReport rep;
  rep.residual = A.field.max_prec() + (L - 1) * A.pi1_val;
  for (long long j = 0; j < L; ++j) {
    Valuation v = valuation(diff.coeff(j));
    rep.residual = std::min(rep.residual, v.v);
    if (!v.at_least && !rep.certified_violation) {
      rep.certified_violation = true;
      rep.witness = j;
    }
  }
  return rep;
}

}  // namespace padlift
