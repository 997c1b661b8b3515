#ifndef PADLIFT_LIFT_CHECK_HPP_
#define PADLIFT_LIFT_CHECK_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padlift/newton.hpp"
#include "padlift/series.hpp"

namespace padlift {

/// Candidate lift data: a Frobenius-lift series P together with a finite
/// labeled family {F_g} and a partial multiplication table. The family
/// stands in for a (possibly infinite) group; checks certify consistency on
/// this sample only, at the stored truncation, never liftability itself.
struct LiftElement {
  std::string label;
  TruncSeries F;
};

struct LiftSpec {
  PadicField field;
  TruncSeries P;
  std::vector<LiftElement> elements;
  // (g, h, gh) meaning F_h(F_g) = F_gh is required to hold.
  std::vector<std::array<std::string, 3>> products;
  // Optional expected reductions mod the maximal ideal, label -> series.
  std::vector<std::pair<std::string, ResidueSeries>> residue_action;
};

enum class Verdict { Accept, Reject, Inconclusive };

const char* verdict_name(Verdict v);

/// One checked identity: the valuation of the difference series, the claim
/// it had to reach, and (on failure) the first coefficient that misses it.
struct ResidualEntry {
  std::string label;
  Valuation residual;        // min over coefficients of the difference
  long long claim = 0;       // joint guaranteed precision of the comparison
  bool ok = false;
  long long witness_index = -1;  // first failing T-degree when !ok
};

struct CheckReport {
  bool frobenius_reduction_ok = false;
  std::vector<ResidualEntry> commutation;    // F_g(P) - P(F_g) per element
  std::vector<ResidualEntry> cocycle;        // F_h(F_g) - F_gh per product
  std::vector<ResidualEntry> residue_match;  // optional condition (1)
  std::vector<std::pair<std::string, PadicElem>> character;  // F_g'(0)
  std::vector<bool> character_is_unit;
  std::vector<ResidualEntry> character_hom;  // f1(g) f1(h) - f1(gh)
  std::vector<std::pair<std::string, std::string>> collisions;
  Valuation p1_val;     // valuation of P'(0)
  bool p1_certified = false;  // P'(0) distinguishable from zero
  long long working_prec = 0;  // weakest joint claim across all checks
  long long attrition = 0;     // N - working_prec (composition losses)
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> reasons;
};

/// Verifies the sampled lift conditions at stored precision. A Reject
/// carries the first failing coefficient of the first failing identity.
/// Throws MalformedGroupData for duplicate or dangling labels.
CheckReport check_lift(const LiftSpec& spec);

/// f1 = F'(0). The linear coefficient of a candidate group element.
PadicElem character(const TruncSeries& F);

struct NormalizeResult {
  LiftSpec spec;
  PadicElem a;  // the fixed point used for the change of variable
  // valuation of each conjugated element's constant term (should vanish)
  std::vector<std::pair<std::string, Valuation>> const_term_residuals;
};

/// Conjugates the whole spec by T -> T + a with a = fixed_point(P), so the
/// returned P fixes 0 at stated precision. Element constant terms are
/// reported, not assumed, to vanish.
NormalizeResult normalize_lift(const LiftSpec& spec);

struct LeadingTermEntry {
  std::string label;
  PadicElem f1;
  long long lowest_nonidentity_degree = -1;  // lowest certain term of F - T
  bool constraint_ok = false;  // pi_k (f1^k - f1) vanishes at joint claim
};

struct LeadingTermReport {
  long long k = -1;                // lowest certain T-degree of P
  std::optional<PadicElem> pi_k;   // its coefficient (absent if P ~ 0)
  std::vector<LeadingTermEntry> entries;
};

/// Reads off the leading data (k, pi_k) of a normalized P and checks the
/// compatibility constraint f1 * pi_k = pi_k * f1^k for each element.
LeadingTermReport leading_term_report(const LiftSpec& spec);

}  // namespace padlift

#endif  // PADLIFT_LIFT_CHECK_HPP_
