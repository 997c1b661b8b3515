#include "padlift/norm_op.hpp"

#include <algorithm>
#include <utility>

#include "padlift/error.hpp"

namespace padlift {

namespace {

long long small_q(const PadicField& k) {
  Int q = k.q();
  if (q > 4096)
    throw Error(Errc::BadInput, "residue field too large for the norm matrix");
  return q.convert_to<long long>();
}

void validate_frobenius_like(const TruncSeries& P, long long q) {
  if (P.shift() != 0)
    throw Error(Errc::NotDistinguished, "P must be a power series");
  if (P.len() <= q)
    throw Error(Errc::NotDistinguished,
                "window must exceed q to certify the reduction of P");
  if (!valuation(P.coeff(0)).at_least)
    throw Error(Errc::NotDistinguished, "P must vanish at 0");
  if (!res_series_is_monomial(reduce_mod_p(P), q, res_one(P.field())))
    throw Error(Errc::NotDistinguished,
                "P must reduce to T^q modulo the maximal ideal");
}

/// Multiplication by S inside a fixed window: shift the coefficients up and
/// drop the top one (exact in the S-adic sense).
TruncSeries times_s(const TruncSeries& f) {
  std::vector<PadicElem> c;
  c.reserve(static_cast<size_t>(f.len()));
  c.push_back(f.field().zero());
  for (long long j = 0; j + 1 < f.len(); ++j) c.push_back(f.coeff(j));
  return TruncSeries(f.field(), 0, std::move(c));
}

/// Remainder of a polynomial (X-coefficient list of S-series) modulo the
/// monic W; standard long division, quotient discarded.
std::vector<TruncSeries> reduce_mod_w(std::vector<TruncSeries> a,
                                      const WeierstrassData& wd) {
  const long long q = wd.q;
  for (long long d = static_cast<long long>(a.size()) - 1; d >= q; --d) {
    const TruncSeries c = a[static_cast<size_t>(d)];
    for (long long i = 0; i < q; ++i)
      a[static_cast<size_t>(d - q + i)] =
          a[static_cast<size_t>(d - q + i)] - c * wd.W[static_cast<size_t>(i)];
  }
  a.resize(static_cast<size_t>(q), TruncSeries::zero(wd.field, wd.M_S));
  return a;
}

/// Division-free determinant: Laplace expansion organized over row subsets,
/// so the cost is q * 2^q series products instead of q!. No pivots are
/// needed, which matters here because natural inputs (multiplication by T)
/// have determinants divisible by S.
TruncSeries det_subsets(const std::vector<std::vector<TruncSeries>>& m) {
  const size_t n = m.size();
  const auto& k = m[0][0].field();
  const long long len = m[0][0].len();
  // partial[mask] = det of the submatrix on rows in `mask` and the first
  // popcount(mask) columns.
  std::vector<TruncSeries> partial(size_t{1} << n,
                                   TruncSeries::zero(k, len));
  partial[0] = TruncSeries::constant(k.one(), len);
  for (size_t mask = 1; mask < partial.size(); ++mask) {
    size_t col = static_cast<size_t>(__builtin_popcountll(mask)) - 1;
    TruncSeries acc = TruncSeries::zero(k, len);
    size_t seen = 0;
    for (size_t r = 0; r < n; ++r) {
      if (!(mask & (size_t{1} << r))) continue;
      auto term = m[r][col] * partial[mask & ~(size_t{1} << r)];
      acc = (seen % 2 == 0) ? acc + term : acc - term;
      ++seen;
    }
    partial[mask] = std::move(acc);
  }
  // Expanding always along the highest column accumulates a fixed sign of
  // (-1)^{n(n-1)/2} relative to the determinant.
  auto result = partial[(size_t{1} << n) - 1];
  return (n * (n - 1) / 2) % 2 == 0 ? result : -result;
}

/// Determinant of multiplication-by-h on the basis 1, X, ..., X^{q-1}.
TruncSeries matrix_norm(const TruncSeries& h0, const WeierstrassData& wd) {
  const long long q = wd.q;
  // h as an X-polynomial with constant S-coefficients.
  std::vector<TruncSeries> hX;
  hX.reserve(static_cast<size_t>(h0.len()));
  for (long long j = 0; j < h0.len(); ++j)
    hX.push_back(TruncSeries::constant(h0.coeff(j), wd.M_S));

  std::vector<std::vector<TruncSeries>> m(
      static_cast<size_t>(q),
      std::vector<TruncSeries>(static_cast<size_t>(q),
                               TruncSeries::zero(wd.field, wd.M_S)));
  for (long long j = 0; j < q; ++j) {
    std::vector<TruncSeries> col(static_cast<size_t>(j),
                                 TruncSeries::zero(wd.field, wd.M_S));
    col.insert(col.end(), hX.begin(), hX.end());  // X^j * h(X)
    col = reduce_mod_w(std::move(col), wd);
    for (long long i = 0; i < q; ++i)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          col[static_cast<size_t>(i)];
  }
  return det_subsets(m);
}

}  // namespace

WeierstrassData weierstrass_prepare(const TruncSeries& P, long long M_S,
                                    long long M_X, bool with_cofactor) {
  const auto& k = P.field();
  const long long q = small_q(k);
  validate_frobenius_like(P, q);
  if (M_S < 1) throw Error(Errc::BadInput, "M_S must be positive");
  if (M_X < 0) M_X = q * (k.max_prec() + M_S) + q;
  if (M_X <= q) throw Error(Errc::BadInput, "M_X must exceed q");

  // B = X^q - (P(X) - S). Every coefficient of B is divisible by varpi (P
  // reduces to the bare monomial), except for the explicit +S at X^0.
  const long long degB = std::max(P.len() - 1, q);
  std::vector<PadicElem> bc(static_cast<size_t>(degB) + 1, k.zero());
  for (long long j = 0; j < P.len(); ++j) bc[static_cast<size_t>(j)] = -P.coeff(j);
  bc[static_cast<size_t>(q)] = k.one() - P.coeff(q);

  auto zs = TruncSeries::zero(k, M_S);
  std::vector<TruncSeries> R(static_cast<size_t>(q), zs);
  std::vector<TruncSeries> Q(static_cast<size_t>(M_X), zs);
  std::vector<TruncSeries> rem(static_cast<size_t>(q) + 1, zs);
  rem[static_cast<size_t>(q)] = TruncSeries::constant(k.one(), M_S);

  // Dividing X^q by P(X) - S: each pass moves the low part of the remainder
  // into R, the rest into Q, and re-expands through B, gaining one power of
  // the ideal (varpi, S). Stored coordinates die out once the accumulated
  // weight clears both the coefficient modulus and the S window.
  const long long max_iters = k.max_prec() + M_S + 8;
  bool done = false;
  for (long long it = 0; it < max_iters && !done; ++it) {
    for (long long d = 0; d < q && d < static_cast<long long>(rem.size()); ++d)
      R[static_cast<size_t>(d)] = R[static_cast<size_t>(d)] + rem[static_cast<size_t>(d)];
    std::vector<TruncSeries> high;
    for (size_t d = static_cast<size_t>(q); d < rem.size(); ++d)
      high.push_back(rem[d]);
    done = true;
    for (const auto& s : high)
      for (const auto& c : s.coeffs())
        if (!c.is_zero_stored()) done = false;
    if (done) break;
    for (size_t d = 0; d < high.size() && d < Q.size(); ++d)
      Q[d] = Q[d] + high[d];

    long long new_deg =
        std::min<long long>(static_cast<long long>(high.size()) - 1 + degB,
                            M_X - 1);
    std::vector<TruncSeries> next(static_cast<size_t>(new_deg) + 1, zs);
    for (size_t jh = 0; jh < high.size(); ++jh) {
      if (static_cast<long long>(jh) > new_deg) break;
      // the +S part of B's constant coefficient
      next[jh] = next[jh] + times_s(high[jh]);
      for (long long jb = 0; jb <= degB; ++jb) {
        long long d = static_cast<long long>(jh) + jb;
        if (d > new_deg) break;
        const auto& c = bc[static_cast<size_t>(jb)];
        if (c.is_zero_stored() && c.prec() >= k.max_prec()) continue;
        next[static_cast<size_t>(d)] =
            next[static_cast<size_t>(d)] + high[jh].mul_scalar(c);
      }
    }
    rem = std::move(next);
  }
  if (!done)
    throw Error(Errc::PrecisionExhausted,
                "Weierstrass division did not stabilize");

  // The X-truncation only certifies the split modulo (varpi, S)^w with
  // w = (M_X - q)/q + 1; cap the claims of the S^b coefficient accordingly.
  const long long w = (M_X - q) / q + 1;
  auto cap_claims = [&](TruncSeries s) {
    std::vector<PadicElem> c;
    c.reserve(static_cast<size_t>(s.len()));
    for (long long b = 0; b < s.len(); ++b)
      c.push_back(s.coeff(b).with_prec(std::max(w - b, 0LL)));
    return TruncSeries(k, 0, std::move(c));
  };

  WeierstrassData wd;
  wd.field = k;
  wd.q = q;
  wd.M_S = M_S;
  wd.M_X = M_X;
  wd.W.reserve(static_cast<size_t>(q) + 1);
  for (long long d = 0; d < q; ++d)
    wd.W.push_back(cap_claims(-R[static_cast<size_t>(d)]));
  wd.W.push_back(TruncSeries::constant(k.one(), M_S));

  // U = Q^{-1}, X-adically; the X^0 coefficient of Q is a unit of O_E[[S]]
  // (it is 1 modulo the ideal).
  if (!valuation(Q[0].coeff(0)).is_zero_exact())
    throw Error(Errc::NotAUnit, "cofactor is not a unit");
  if (with_cofactor) {
    auto u0 = mul_inverse(Q[0]);
    std::vector<TruncSeries> U;
    U.reserve(static_cast<size_t>(M_X));
    U.push_back(u0);
    for (long long n = 1; n < M_X; ++n) {
      auto s = zs;
      for (long long j = 1; j <= n; ++j)
        s = s + Q[static_cast<size_t>(j)] * U[static_cast<size_t>(n - j)];
      U.push_back(-(u0 * s).truncated(M_S));
    }
    for (auto& u : U) u = cap_claims(std::move(u));
    wd.U = std::move(U);
  }

  long long prec = k.max_prec();
  for (const auto& s : wd.W) prec = std::min(prec, s.min_reported_prec());
  wd.prec = prec;
  return wd;
}

TruncSeries norm_op(const TruncSeries& h, const WeierstrassData& wd) {
  const auto& k = wd.field;
  require_same_field(k, h.field(), "norm_op");
  TruncSeries h0(k, 0, h.coeffs());
  TruncSeries result = matrix_norm(h0, wd);
  const long long s = h.shift();
  if (s == 0) return result;

  // T^s factors through the image of T, which must be T times a unit.
  auto nt = matrix_norm(TruncSeries::identity(k, wd.M_S), wd);
  if (!valuation(nt.coeff(0)).at_least ||
      !valuation(nt.coeff(1)).is_zero_exact())
    throw Error(Errc::NotAUnitTail,
                "image of T is not T times a unit at this precision");
  if (s > 0) {
    for (long long i = 0; i < s; ++i) result = result * nt;
  } else {
    auto nti = mul_inverse(nt);
    for (long long i = 0; i < -s; ++i) result = result * nti;
  }
  return result;
}

TruncSeries norm_op(const TruncSeries& h, const TruncSeries& P, long long M_S,
                    long long M_X) {
  require_same_field(P.field(), h.field(), "norm_op");
  if (M_S < 0) M_S = h.len();
  auto wd = weierstrass_prepare(P, M_S, M_X, /*with_cofactor=*/false);
  return norm_op(h, wd);
}

}  // namespace padlift
