#include "padlift/series.hpp"

#include <algorithm>

namespace padlift {

namespace {

long long sat_mul(long long a, long long b, long long cap) {
  if (a <= 0 || b <= 0) return 0;
  if (a > cap / b) return cap;
  return std::min(a * b, cap);
}

}  // namespace

TruncSeries::TruncSeries(PadicField field, long long shift,
                         std::vector<PadicElem> coeffs)
    : field_(std::move(field)), shift_(shift), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw Error(Errc::BadInput, "series needs at least one coefficient");
  for (const auto& c : coeffs_)
    require_same_field(field_, c.field(), "series");
}

TruncSeries TruncSeries::zero(const PadicField& k, long long len) {
  return TruncSeries(k, 0,
                     std::vector<PadicElem>(static_cast<size_t>(len), k.zero()));
}

TruncSeries TruncSeries::constant(const PadicElem& c, long long len) {
  auto s = zero(c.field(), len);
  s.coeffs_[0] = c;
  return s;
}

TruncSeries TruncSeries::identity(const PadicField& k, long long len) {
  auto s = zero(k, std::max<long long>(len, 2));
  s.coeffs_[1] = k.one();
  return s;
}

TruncSeries TruncSeries::from_ints(const PadicField& k, std::vector<Int> cs) {
  std::vector<PadicElem> coeffs;
  coeffs.reserve(cs.size());
  for (const auto& c : cs) coeffs.push_back(k.from_int(c));
  return TruncSeries(k, 0, std::move(coeffs));
}

PadicElem TruncSeries::coeff(long long deg) const {
  if (deg < shift_) return field_.zero();
  if (deg >= order_cap())
    throw Error(Errc::BadInput, "coefficient beyond the truncation window");
  return coeffs_[static_cast<size_t>(deg - shift_)];
}

long long TruncSeries::min_reported_prec() const {
  long long m = field_.N();
  for (const auto& c : coeffs_) m = std::min(m, c.reported_prec());
  return m;
}

std::vector<long long> TruncSeries::coeff_precs() const {
  std::vector<long long> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.prec());
  return v;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  require_same_field(field_, o.field_, "series add");
  long long s = std::min(shift_, o.shift_);
  long long cap = std::min(order_cap(), o.order_cap());
  if (cap <= s)
    throw Error(Errc::BadInput, "series windows do not overlap");
  std::vector<PadicElem> c;
  c.reserve(static_cast<size_t>(cap - s));
  for (long long d = s; d < cap; ++d) c.push_back(coeff(d) + o.coeff(d));
  return TruncSeries(field_, s, std::move(c));
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  return *this + (-o);
}

TruncSeries TruncSeries::operator-() const {
  std::vector<PadicElem> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(-x);
  return TruncSeries(field_, shift_, std::move(c));
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  require_same_field(field_, o.field_, "series mul");
  long long outlen = std::min(len(), o.len());
  std::vector<PadicElem> c(static_cast<size_t>(outlen), field_.zero());
  for (long long i = 0; i < len(); ++i) {
    if (coeffs_[static_cast<size_t>(i)].is_zero_stored() &&
        coeffs_[static_cast<size_t>(i)].prec() >= field_.max_prec())
      continue;
    for (long long j = 0; j < o.len() && i + j < outlen; ++j) {
      c[static_cast<size_t>(i + j)] =
          c[static_cast<size_t>(i + j)] +
          coeffs_[static_cast<size_t>(i)] * o.coeffs_[static_cast<size_t>(j)];
    }
  }
  return TruncSeries(field_, shift_ + o.shift_, std::move(c));
}

TruncSeries TruncSeries::mul_scalar(const PadicElem& c) const {
  std::vector<PadicElem> out;
  out.reserve(coeffs_.size());
  for (const auto& x : coeffs_) out.push_back(x * c);
  return TruncSeries(field_, shift_, std::move(out));
}

TruncSeries TruncSeries::mul_monomial(long long k) const {
  return TruncSeries(field_, shift_ + k, coeffs_);
}

TruncSeries TruncSeries::truncated(long long len) const {
  if (len >= this->len()) return *this;
  if (len < 1) throw Error(Errc::BadInput, "truncation to empty window");
  return TruncSeries(field_, shift_,
                     std::vector<PadicElem>(coeffs_.begin(),
                                            coeffs_.begin() + len));
}

TruncSeries TruncSeries::extended(long long len, long long added_prec) const {
  if (len <= this->len()) return *this;
  auto c = coeffs_;
  c.resize(static_cast<size_t>(len), field_.zero().with_prec(added_prec));
  return TruncSeries(field_, shift_, std::move(c));
}

TruncSeries TruncSeries::with_prec(long long prec) const {
  std::vector<PadicElem> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(x.with_prec(prec));
  return TruncSeries(field_, shift_, std::move(c));
}

TruncSeries TruncSeries::pow(long long k) const {
  if (k < 0) throw Error(Errc::BadInput, "negative series power");
  auto r = constant(field_.one(), len());
  auto b = *this;
  for (;;) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k == 0) break;
    b = b * b;
  }
  return r;
}

TruncSeries compose(const TruncSeries& f, const TruncSeries& g) {
  require_same_field(f.field(), g.field(), "compose");
  if (f.shift() != 0 || g.shift() != 0)
    throw Error(Errc::BadInput, "compose requires shift-0 series");
  Valuation v0 = valuation(g.coeff(0));
  if (v0.lower() < 1)
    throw Error(Errc::ConstantTermNotSmall,
                "inner series has a unit constant term (valuation " +
                    v0.str() + ")");
  const long long Lf = f.len();
  const long long W = std::min(Lf, g.len());
  const auto& k = f.field();
  auto r = TruncSeries::constant(f.coeff(Lf - 1), W);
  for (long long i = Lf - 2; i >= 0; --i)
    r = r * g + TruncSeries::constant(f.coeff(i), W);
  // The dropped tail of f contributes val >= (Lf - j) * val(g(0)) to
  // coefficient j.
  long long cap = k.max_prec();
  std::vector<PadicElem> out;
  out.reserve(static_cast<size_t>(W));
  for (long long j = 0; j < W; ++j)
    out.push_back(r.coeff(j).with_prec(sat_mul(Lf - j, v0.lower(), cap)));
  return TruncSeries(k, 0, std::move(out));
}

TruncSeries comp_inverse(const TruncSeries& f) {
  if (f.shift() != 0)
    throw Error(Errc::BadInput, "comp_inverse requires a shift-0 series");
  if (f.len() < 2)
    throw Error(Errc::NotInvertible, "series window too short");
  Valuation v0 = valuation(f.coeff(0));
  if (!v0.at_least)
    throw Error(Errc::NotInvertible,
                "constant term is distinguishable from zero");
  auto f1 = f.coeff(1);
  if (!valuation(f1).is_zero_exact())
    throw Error(Errc::NotInvertible, "linear coefficient is not a unit");
  const long long M = f.len();
  const auto& k = f.field();
  // Work with the constant term forced to an exact zero; the final claims
  // are capped by how well that term was known to vanish.
  auto fc = f.coeffs();
  fc[0] = k.zero();
  TruncSeries fz(k, 0, std::move(fc));
  auto fp = derivative(fz);  // window M-1
  auto g = TruncSeries::identity(k, 2).mul_scalar(invert(f1));
  // Newton doubling: if g is correct mod T^w then the update is correct
  // mod T^{2w}. err has an exact-zero constant term, so it is shifted down
  // one degree before dividing; this keeps every window honest.
  long long w = 2;
  while (w < M) {
    w = std::min(2 * w, M);
    g = g.extended(w, k.max_prec());
    auto err = compose(fz.truncated(w), g) - TruncSeries::identity(k, w);
    std::vector<PadicElem> tail(err.coeffs().begin() + 1, err.coeffs().end());
    TruncSeries err_over_t(k, 0, std::move(tail));  // window w-1
    auto inv = mul_inverse(
        compose(fp.truncated(std::min(fp.len(), w - 1)), g.truncated(w - 1)));
    auto corr = (err_over_t * inv).mul_monomial(1);
    g = g - corr;
  }
  return g.with_prec(v0.v);
}

TruncSeries mul_inverse(const TruncSeries& f) {
  // Locate the lowest coefficient that is certainly a unit; anything below
  // that must be indistinguishable from zero.
  const auto& k = f.field();
  long long lead = -1;
  long long drop_cap = k.max_prec();
  for (long long i = 0; i < f.len(); ++i) {
    Valuation v = valuation(f.coeffs()[static_cast<size_t>(i)]);
    if (v.at_least) {
      drop_cap = std::min(drop_cap, v.v);
      continue;
    }
    if (v.v > 0)
      throw Error(Errc::NotAUnit,
                  "lowest certain coefficient has positive valuation");
    lead = i;
    break;
  }
  if (lead < 0)
    throw Error(Errc::NotAUnit, "series is indistinguishable from zero");
  const long long L = f.len() - lead;
  std::vector<PadicElem> uc(f.coeffs().begin() + lead, f.coeffs().end());
  TruncSeries u(k, 0, std::move(uc));
  auto h = TruncSeries::constant(invert(u.coeff(0)), L);
  auto two = TruncSeries::constant(k.from_int(2), L);
  int rounds = 1;
  while ((1LL << rounds) < L) ++rounds;
  ++rounds;
  if (L == 1) rounds = 0;
  for (int it = 0; it < rounds; ++it) h = h * (two - u * h);
  std::vector<PadicElem> out;
  out.reserve(static_cast<size_t>(L));
  for (long long j = 0; j < L; ++j)
    out.push_back(h.coeff(j).with_prec(drop_cap));
  return TruncSeries(k, -(f.shift() + lead), std::move(out));
}

TruncSeries derivative(const TruncSeries& f) {
  const auto& k = f.field();
  if (f.shift() == 0) {
    if (f.len() == 1) return TruncSeries::zero(k, 1);
    std::vector<PadicElem> c;
    c.reserve(static_cast<size_t>(f.len() - 1));
    for (long long j = 1; j < f.len(); ++j)
      c.push_back(f.coeff(j) * k.from_int(j));
    return TruncSeries(k, 0, std::move(c));
  }
  std::vector<PadicElem> c;
  c.reserve(static_cast<size_t>(f.len()));
  for (long long i = 0; i < f.len(); ++i)
    c.push_back(f.coeffs()[static_cast<size_t>(i)] * k.from_int(f.shift() + i));
  return TruncSeries(k, f.shift() - 1, std::move(c));
}

TruncSeries taylor_shift(const TruncSeries& f, const PadicElem& a) {
  require_same_field(f.field(), a.field(), "taylor_shift");
  if (f.shift() != 0)
    throw Error(Errc::BadInput, "taylor_shift requires a shift-0 series");
  Valuation va = valuation(a);
  if (va.lower() < 1)
    throw Error(Errc::ShiftNotSmall,
                "shift amount must have positive valuation (got " + va.str() +
                    ")");
  const long long L = f.len();
  const auto& k = f.field();
  std::vector<PadicElem> apow;
  apow.reserve(static_cast<size_t>(L));
  apow.push_back(k.one());
  for (long long t = 1; t < L; ++t) apow.push_back(apow.back() * a);
  // Pascal's triangle up to row L-1.
  std::vector<std::vector<Int>> binom(static_cast<size_t>(L));
  for (long long n = 0; n < L; ++n) {
    auto& row = binom[static_cast<size_t>(n)];
    row.assign(static_cast<size_t>(n) + 1, Int(1));
    for (long long j = 1; j < n; ++j)
      row[static_cast<size_t>(j)] = binom[static_cast<size_t>(n - 1)][static_cast<size_t>(j - 1)] +
                                    binom[static_cast<size_t>(n - 1)][static_cast<size_t>(j)];
  }
  long long cap = k.max_prec();
  std::vector<PadicElem> out;
  out.reserve(static_cast<size_t>(L));
  for (long long j = 0; j < L; ++j) {
    auto acc = k.zero();
    for (long long n = j; n < L; ++n) {
      auto term = f.coeff(n) * apow[static_cast<size_t>(n - j)] *
                  k.from_int(binom[static_cast<size_t>(n)][static_cast<size_t>(j)]);
      acc = acc + term;
    }
    out.push_back(acc.with_prec(sat_mul(L - j, va.lower(), cap)));
  }
  return TruncSeries(k, 0, std::move(out));
}

TruncSeries binomial_series(const PadicElem& c, long long len) {
  const auto& k = c.field();
  if (len < 2) throw Error(Errc::BadInput, "binomial series window too short");
  std::vector<PadicElem> out;
  out.reserve(static_cast<size_t>(len));
  out.push_back(k.zero());
  auto w = k.one();
  for (long long j = 1; j < len; ++j) {
    w = w * (c - k.from_int(j - 1));
    Int unit_part = j;
    long long v = 0;
    while (unit_part % k.p() == 0) {
      unit_part /= k.p();
      ++v;
    }
    if (unit_part != 1) w = w * invert(k.from_int(unit_part));
    if (v > 0) w = div_by_pi_power(w, v * k.e());
    out.push_back(w);
  }
  return TruncSeries(k, 0, std::move(out));
}

PadicElem evaluate(const TruncSeries& f, const PadicElem& x) {
  require_same_field(f.field(), x.field(), "evaluate");
  if (f.shift() != 0)
    throw Error(Errc::BadInput, "evaluate requires a shift-0 series");
  Valuation vx = valuation(x);
  if (vx.lower() < 1)
    throw Error(Errc::ConstantTermNotSmall, "evaluation point is a unit");
  auto r = f.coeff(f.len() - 1);
  for (long long i = f.len() - 2; i >= 0; --i) r = r * x + f.coeff(i);
  return r.with_prec(sat_mul(f.len(), vx.lower(), f.field().max_prec()));
}

long long series_diff_val(const TruncSeries& a, const TruncSeries& b) {
  auto d = a - b;
  long long m = a.field().max_prec();
  for (const auto& c : d.coeffs()) m = std::min(m, valuation(c).lower());
  return m;
}

bool series_eq_at(const TruncSeries& a, const TruncSeries& b, long long t) {
  return series_diff_val(a, b) >= t;
}

// ---- residue series ----

ResidueSeries reduce_mod_p(const TruncSeries& f) {
  ResidueSeries r;
  r.field = f.field();
  r.shift = f.shift();
  r.coeffs.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) r.coeffs.push_back(residue(c));
  return r;
}

ResidueSeries res_series_mul(const ResidueSeries& a, const ResidueSeries& b) {
  ResidueSeries r;
  r.field = a.field;
  r.shift = a.shift + b.shift;
  long long outlen = std::min(a.len(), b.len());
  r.coeffs.assign(static_cast<size_t>(outlen), res_zero(a.field));
  for (long long i = 0; i < a.len(); ++i)
    for (long long j = 0; j < b.len() && i + j < outlen; ++j)
      r.coeffs[static_cast<size_t>(i + j)] = res_add(
          a.field, r.coeffs[static_cast<size_t>(i + j)],
          res_mul(a.field, a.coeffs[static_cast<size_t>(i)],
                  b.coeffs[static_cast<size_t>(j)]));
  return r;
}

ResidueSeries res_series_compose(const ResidueSeries& f,
                                 const ResidueSeries& g) {
  if (f.shift != 0 || g.shift != 0)
    throw Error(Errc::BadInput, "residue compose requires shift-0 series");
  if (!g.coeffs.empty() && !g.coeffs[0].is_zero())
    throw Error(Errc::ConstantTermNotSmall,
                "residue compose requires g(0) = 0");
  long long W = std::min(f.len(), g.len());
  ResidueSeries r;
  r.field = f.field;
  r.shift = 0;
  r.coeffs.assign(static_cast<size_t>(W), res_zero(f.field));
  r.coeffs[0] = f.coeffs[static_cast<size_t>(f.len() - 1)];
  ResidueSeries acc = r;
  for (long long i = f.len() - 2; i >= 0; --i) {
    acc = res_series_mul(acc, g);
    acc.coeffs.resize(static_cast<size_t>(W), res_zero(f.field));
    acc.coeffs[0] = res_add(f.field, acc.coeffs[0],
                            f.coeffs[static_cast<size_t>(i)]);
  }
  return acc;
}

bool res_series_eq(const ResidueSeries& a, const ResidueSeries& b) {
  long long s = std::min(a.shift, b.shift);
  long long cap = std::min(a.shift + a.len(), b.shift + b.len());
  auto at = [](const ResidueSeries& f, long long d) {
    if (d < f.shift || d >= f.shift + f.len())
      return ResidueElem{std::vector<Int>(f.coeffs.empty()
                                              ? 1
                                              : f.coeffs[0].coords.size(),
                                          Int(0))};
    return f.coeffs[static_cast<size_t>(d - f.shift)];
  };
  for (long long d = s; d < cap; ++d)
    if (!(at(a, d) == at(b, d))) return false;
  return true;
}

bool res_series_is_monomial(const ResidueSeries& f, long long d,
                            const ResidueElem& c) {
  for (long long i = 0; i < f.len(); ++i) {
    long long deg = f.shift + i;
    const auto& x = f.coeffs[static_cast<size_t>(i)];
    if (deg == d) {
      if (!(x == c)) return false;
    } else if (!x.is_zero()) {
      return false;
    }
  }
  return true;
}

}  // namespace padlift
