#ifndef PADLIFT_LUBIN_LOG_HPP_
#define PADLIFT_LUBIN_LOG_HPP_

#include <vector>

#include "padlift/padic.hpp"
#include "padlift/series.hpp"

namespace padlift {

/// A field element with an explicit power-of-pi scale: the value is
/// pi^shift * unit, with `unit` integral and `shift` possibly negative.
/// Logarithm coefficients need this form because a_k generally carries a
/// pi-power denominator; divisions by pi1 become exact shift bookkeeping.
struct ScaledElem {
  long long shift = 0;
  PadicElem unit;
};

/// The series A(T) = T + a_2 T^2 + ... solving A(P(T)) = P'(0) * A(T),
/// which linearizes the dynamics of P. Coefficient k satisfies
/// a_k in pi1^{1-k} * O_E, i.e. coeffs[k].shift >= (1-k) * pi1_val.
struct LogSeries {
  PadicField field;
  PadicElem pi1;          // P'(0)
  long long pi1_val = 0;  // its exact pi-valuation (>= 1)
  /// Index k holds a_k; entry 0 is zero, entry 1 is exactly 1. When a_k is
  /// certified nonzero the unit part has valuation 0; when it is zero at
  /// the working claim the unit stores that near-zero residue unscaled.
  std::vector<ScaledElem> coeffs;
  /// Valuation of pi1^{len-1} * (A(P) - pi1 * A), the self-check residual
  /// after clearing all denominators (claims-limited; the true value is 0).
  long long residual = 0;
  long long prec = 0;  // weakest claim among the stored unit parts

  long long len() const { return static_cast<long long>(coeffs.size()); }
  /// pi1^{len()-1} * A: every coefficient cleared to an integral element,
  /// suitable for ordinary window arithmetic.
  TruncSeries cleared() const;
};

/// Solves A(P(T)) = P'(0) A(T) with a_1 = 1 degree by degree on the window
/// T^M (defaults to P's window; a longer window treats P as an exact
/// polynomial). P must fix 0 and P'(0) must have certified valuation >= 1;
/// each step divides by the unit 1 - pi1^{k-1} and shifts by val(pi1), so
/// no digits are lost beyond unit inversions.
LogSeries logarithm(const TruncSeries& P, long long M = -1);

/// Outcome of testing the eigen relation A(F(T)) = f1 * A(T). The
/// comparison clears denominators by pi1^{len-1} first; `residual` is the
/// smallest pi-valuation among the cleared difference's coefficients. A
/// certified-nonzero coefficient marks a genuine violation and `witness`
/// records the first offending T-degree.
struct EigenReport {
  long long residual = 0;
  bool certified_violation = false;
  long long witness = -1;
};

EigenReport eigen_check(const LogSeries& A, const TruncSeries& F,
                        const PadicElem& f1);

}  // namespace padlift

#endif  // PADLIFT_LUBIN_LOG_HPP_
