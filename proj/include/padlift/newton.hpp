#ifndef PADLIFT_NEWTON_HPP_
#define PADLIFT_NEWTON_HPP_

#include <vector>

#include "padlift/series.hpp"

namespace padlift {

struct PolygonVertex {
  long long deg = 0;
  Rational valp;  // val_p (varpi-valuation divided by e)
};

struct PolygonSegment {
  Rational slope;
  long long length = 0;  // horizontal span in degrees
};

/// Lower convex hull of the certified points (k, val_p(c_k)). Coefficients
/// whose valuation is only a bound are excluded from the support; if such a
/// bound falls strictly below the certified hull inside its span the hull
/// cannot be trusted and PrecisionAmbiguous is thrown. The hull is only
/// asserted over [first vertex, last vertex] within degrees 0..degree_cap.
struct NewtonPolygon {
  std::vector<PolygonVertex> vertices;

  std::vector<PolygonSegment> segments() const;
};

NewtonPolygon newton_polygon(const TruncSeries& f, long long degree_cap);

/// The small fixed point of P (P(a) = a with val_p(a) = val_p(P(0))), for P
/// congruent to T^q mod varpi with val(P(0)) >= 1. Seeded at P(0) and
/// refined by Newton steps a <- a - (P(a)-a)/(P'(a)-1); the denominator is a
/// unit because P'(a) is in the maximal ideal. The result's precision is the
/// certified residual valuation; the residual is re-verified before return.
PadicElem fixed_point(const TruncSeries& P);

}  // namespace padlift

#endif  // PADLIFT_NEWTON_HPP_
