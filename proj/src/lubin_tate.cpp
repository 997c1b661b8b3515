#include "padlift/lubin_tate.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "padlift/bigint.hpp"
#include "padlift/error.hpp"

namespace padlift {

namespace {

long long q_as_index(const PadicField& k) {
  Int q = k.q();
  if (q > Int(1) << 40)
    throw Error(Errc::BadInput, "residue field too large for series windows");
  return q.convert_to<long long>();
}

}  // namespace

FrobeniusSeries make_frobenius(TruncSeries f) {
  const auto& k = f.field();
  if (f.shift() != 0)
    throw Error(Errc::BadInput, "Frobenius series must be a power series");
  long long q = q_as_index(k);
  if (f.len() <= q)
    throw Error(Errc::BadInput,
                "series window must exceed q to certify the reduction");
  Valuation v0 = valuation(f.coeff(0));
  if (!v0.at_least)
    throw Error(Errc::BadInput,
                "Frobenius series must vanish at 0 (constant term has "
                "valuation " + v0.str() + ")");
  Valuation v1 = valuation(f.coeff(1));
  if (v1.at_least || v1.v != 1)
    throw Error(Errc::BadInput,
                "linear coefficient must have valuation exactly 1, got " +
                    v1.str());
  if (!res_series_is_monomial(reduce_mod_p(f), q, res_one(k)))
    throw Error(Errc::BadInput,
                "series must reduce to T^q modulo the maximal ideal");
  return FrobeniusSeries{k, std::move(f)};
}

FrobeniusSeries default_frobenius(const PadicField& k, long long M) {
  long long q = q_as_index(k);
  if (M <= q) throw Error(Errc::BadInput, "window must exceed q");
  std::vector<PadicElem> cs(static_cast<size_t>(M), k.zero());
  cs[1] = k.uniformizer();
  cs[static_cast<size_t>(q)] = k.one();
  return make_frobenius(TruncSeries(k, 0, std::move(cs)));
}

PadicField make_lt_field(const Int& p, long long f, long long e,
                         const std::vector<Int>& unram_poly,
                         const std::vector<std::vector<Int>>& eis_poly,
                         long long N, long long M) {
  // One varpi-digit is consumed per degree solved, so reserve M extra
  // p-digits worth on top of the usual denominators-of-binomials guard.
  long long guard = PadicField::default_guard(p, std::max(M, 64LL)) +
                    (M + e - 1) / e + 2;
  return PadicField::make(p, static_cast<int>(f), static_cast<int>(e),
                          unram_poly, eis_poly, static_cast<int>(N), guard);
}

TruncSeries lt_unique_series(const FrobeniusSeries& f, const FrobeniusSeries& g,
                             const PadicElem& a) {
  const auto& k = f.field;
  require_same_field(k, g.field, "lt_unique_series");
  require_same_field(k, a.field(), "lt_unique_series");
  const long long M = std::min(f.series.len(), g.series.len());

  PadicElem f1 = f.series.coeff(1);
  PadicElem g1 = g.series.coeff(1);

  std::vector<PadicElem> F;
  F.reserve(static_cast<size_t>(M));
  F.push_back(k.zero());
  F.push_back(a);

  // Solve f(F) = F(g) one degree at a time. With F known through T^n, the
  // T^{n+1} coefficient c satisfies e_{n+1} + (f1 - g1^{n+1}) c = 0 where
  // e_{n+1} is the current defect. f1 - g1^{n+1} has valuation exactly one
  // (val f1 = val g1 = 1), so the division costs a single varpi digit.
  for (long long n = 1; n + 1 < M; ++n) {
    auto partial = F;
    partial.push_back(k.zero());
    TruncSeries Fp(k, 0, std::move(partial));
    auto defect = compose(f.series, Fp) - compose(Fp, g.series);
    PadicElem e_next = defect.coeff(n + 1);
    PadicElem divisor = f1 - g1.pow(n + 1);
    PadicElem c = -(div_by_pi_power(e_next, 1) *
                    invert(div_by_pi_power(divisor, 1)));
    F.push_back(c);
  }
  return TruncSeries(k, 0, std::move(F));
}

TruncSeries lt_endomorphism(const FrobeniusSeries& f, const PadicElem& a) {
  return lt_unique_series(f, f, a);
}

namespace {

LiftSpec assemble_spec(const PadicField& k, TruncSeries P,
                       const std::vector<Int>& multipliers,
                       const std::function<TruncSeries(const Int&)>& build) {
  LiftSpec spec;
  spec.field = k;
  spec.P = std::move(P);
  std::vector<Int> kept;
  for (const Int& c : multipliers) {
    if (std::find(kept.begin(), kept.end(), c) != kept.end()) continue;
    kept.push_back(c);
    spec.elements.push_back({to_decimal(c), build(c)});
  }
  for (size_t i = 0; i < kept.size(); ++i)
    for (size_t j = i; j < kept.size(); ++j) {
      Int prod = kept[i] * kept[j];
      auto it = std::find(kept.begin(), kept.end(), prod);
      if (it == kept.end()) continue;
      spec.products.push_back({to_decimal(kept[i]), to_decimal(kept[j]),
                               to_decimal(prod)});
    }
  return spec;
}

}  // namespace

LiftSpec lubin_tate_lift(const FrobeniusSeries& f,
                         const std::vector<Int>& units) {
  const auto& k = f.field;
  return assemble_spec(k, f.series, units, [&](const Int& c) {
    return lt_endomorphism(f, k.from_int(c));
  });
}

LiftSpec cyclotomic_lift(const PadicField& k, const std::vector<Int>& exponents,
                         long long M) {
  if (k.f() != 1 || k.e() != 1)
    throw Error(Errc::BadInput,
                "cyclotomic spec needs the base field Q_p (f = e = 1)");
  if (M <= k.p())
    throw Error(Errc::BadInput, "window must exceed p");
  for (const Int& c : exponents)
    if (c % k.p() == 0)
      throw Error(Errc::BadInput,
                  "exponent " + to_decimal(c) + " is not a p-adic unit");
  auto P = binomial_series(k.from_int(k.p()), M);
  return assemble_spec(k, std::move(P), exponents, [&](const Int& c) {
    return binomial_series(k.from_int(c), M);
  });
}

}  // namespace padlift
