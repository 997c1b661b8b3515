#include "padlift/newton.hpp"

#include <algorithm>

namespace padlift {

namespace {

// cross product of (b - a) x (c - a) in the (deg, valp) plane
Rational cross(const PolygonVertex& a, const PolygonVertex& b,
               const PolygonVertex& c) {
  Rational bx(b.deg - a.deg), cx(c.deg - a.deg);
  return bx * (c.valp - a.valp) - (b.valp - a.valp) * cx;
}

}  // namespace

std::vector<PolygonSegment> NewtonPolygon::segments() const {
  std::vector<PolygonSegment> out;
  for (size_t i = 1; i < vertices.size(); ++i) {
    const auto& a = vertices[i - 1];
    const auto& b = vertices[i];
    out.push_back({(b.valp - a.valp) / Rational(b.deg - a.deg),
                   b.deg - a.deg});
  }
  return out;
}

NewtonPolygon newton_polygon(const TruncSeries& f, long long degree_cap) {
  if (f.shift() != 0)
    throw Error(Errc::BadInput, "newton_polygon requires a shift-0 series");
  const long long e = f.field().e();
  long long top = std::min(degree_cap, f.len() - 1);
  std::vector<PolygonVertex> certified;
  std::vector<PolygonVertex> unknown;  // valp holds the lower bound
  for (long long k = 0; k <= top; ++k) {
    Valuation v = valuation(f.coeff(k));
    PolygonVertex pt{k, Rational(v.v, e)};
    if (v.at_least)
      unknown.push_back(pt);
    else
      certified.push_back(pt);
  }
  NewtonPolygon poly;
  if (certified.empty()) return poly;
  // monotone-chain lower hull (input already sorted by degree)
  for (const auto& pt : certified) {
    auto& h = poly.vertices;
    while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), pt) <= 0)
      h.pop_back();
    h.push_back(pt);
  }
  // A coefficient we only know to vanish to some precision could dent the
  // hull if its bound lies strictly below it.
  const auto& h = poly.vertices;
  auto hull_at = [&](long long k) {
    size_t i = 1;
    while (i < h.size() && h[i].deg < k) ++i;
    const auto& a = h[i - 1];
    const auto& b = h[i];
    return a.valp + (b.valp - a.valp) * Rational(k - a.deg, b.deg - a.deg);
  };
  for (const auto& u : unknown) {
    if (u.deg <= h.front().deg || u.deg >= h.back().deg) continue;
    if (u.valp < hull_at(u.deg))
      throw Error(Errc::PrecisionAmbiguous,
                  "coefficient of degree " + std::to_string(u.deg) +
                      " is only known to valuation " +
                      std::to_string(boost::rational_cast<double>(u.valp)) +
                      ", below the certified hull");
  }
  return poly;
}

PadicElem fixed_point(const TruncSeries& P) {
  const auto& k = P.field();
  if (P.shift() != 0)
    throw Error(Errc::BadInput, "fixed_point requires a shift-0 series");
  Int ql = k.q();
  if (ql >= Int(P.len()))
    throw Error(Errc::BadInput, "series window shorter than q");
  long long q = ql.convert_to<long long>();
  auto p0 = P.coeff(0);
  Valuation v0 = valuation(p0);
  if (!v0.at_least && v0.v == 0)
    throw Error(Errc::NoSmallFixedPoint, "constant term is a unit");
  if (!res_series_is_monomial(reduce_mod_p(P), q, res_one(k)))
    throw Error(Errc::NotDistinguished,
                "series does not reduce to T^q mod the maximal ideal");
  if (v0.at_least) {
    // P(0) vanishes to working precision: 0 is a fixed point at that claim.
    return k.zero().with_prec(v0.v);
  }
  // First polygon segment of P - T runs from (0, val(P(0))) to (1, 0):
  // length 1, so exactly one root with val = val(P(0)); chase it by Newton.
  auto Pd = derivative(P);
  auto a = p0;
  long long best = -1;
  PadicElem residual = k.zero();
  for (int it = 0; it < 64; ++it) {
    residual = evaluate(P, a) - a;
    Valuation vr = valuation(residual);
    if (vr.at_least) break;
    if (vr.v <= best)
      throw Error(Errc::PrecisionExhausted,
                  "fixed-point refinement stalled at residual valuation " +
                      vr.str());
    best = vr.v;
    auto denom = evaluate(Pd, a) - k.one();
    a = a - residual * invert(denom);
  }
  Valuation vfinal = valuation(evaluate(P, a) - a);
  if (!vfinal.at_least)
    throw Error(Errc::PrecisionExhausted,
                "fixed-point residual did not vanish at working precision");
  return a.with_prec(vfinal.v);
}

}  // namespace padlift
