#ifndef PADLIFT_NORM_OP_HPP_
#define PADLIFT_NORM_OP_HPP_

#include <vector>

#include "padlift/series.hpp"

namespace padlift {

/// Weierstrass split of P(X) - S over O_E[[S]]: a monic degree-q polynomial
/// W and a unit cofactor U with W * U = P(X) - S modulo
/// (varpi^prec, S^{M_S}, X^{M_X}). W realizes O_E[[T]] as a free rank-q
/// module over O_E[[S]] with S acting through P.
struct WeierstrassData {
  PadicField field;
  long long q = 0;
  std::vector<TruncSeries> W;  // X-coefficients, size q+1, W[q] = 1
  std::vector<TruncSeries> U;  // X-coefficients of the cofactor
  long long M_S = 0;
  long long M_X = 0;
  long long prec = 0;  // weakest certified varpi-claim of the identity
};

/// Splits P(X) - S by successive approximation modulo powers of the ideal
/// (varpi, S). M_X controls how far the X-truncation is carried; the
/// default is generous enough that the X-truncation costs nothing at the
/// field's internal precision. Requires P to reduce to T^q. Passing
/// with_cofactor = false leaves U empty, for callers that only reduce
/// modulo W (the norm path does).
WeierstrassData weierstrass_prepare(const TruncSeries& P, long long M_S,
                                    long long M_X = -1,
                                    bool with_cofactor = true);

/// The norm-style averaging operator attached to P: h is viewed as a
/// multiplication operator on the rank-q module above, its determinant is
/// taken over O_E[[S]], and S is relabeled back to T. Windows: the result
/// has h's window (or M_S when given). Laurent inputs are factored as
/// T^s * h0 and handled through the image of T, which must come out as
/// T * unit (NotAUnitTail otherwise).
TruncSeries norm_op(const TruncSeries& h, const TruncSeries& P,
                    long long M_S = -1, long long M_X = -1);

/// Same, against a preparation computed once (the expensive part when many
/// h share one P).
TruncSeries norm_op(const TruncSeries& h, const WeierstrassData& wd);

}  // namespace padlift

#endif  // PADLIFT_NORM_OP_HPP_
