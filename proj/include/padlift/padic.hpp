#ifndef PADLIFT_PADIC_HPP_
#define PADLIFT_PADIC_HPP_

#include <boost/rational.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "padlift/bigint.hpp"
#include "padlift/error.hpp"

namespace padlift {

using Rational = boost::rational<long long>;

/// A varpi-adic valuation which is either known exactly or only known to be
/// at least some bound (all stored digits vanish).
struct Valuation {
  long long v = 0;
  bool at_least = false;

  static Valuation exact(long long value) { return {value, false}; }
  static Valuation bound(long long value) { return {value, true}; }

  /// Certified lower bound (valid in both cases).
  long long lower() const { return v; }
  bool is_zero_exact() const { return !at_least && v == 0; }
  bool ge(long long t) const { return v >= t; }

  std::string str() const;
};

Valuation val_min(const Valuation& a, const Valuation& b);

class PadicElem;

/// Descriptor of the valuation ring O_E for E/Q_p given as a two-step tower:
/// an unramified step Z_p[u]/(m(u)) of degree f followed by an Eisenstein
/// step of degree e. Elements are carried modulo p^B with
/// B = ceil(N/e) + guard, where N is the advertised varpi-adic precision cap
/// and the guard digits absorb exact divisions inside coefficient
/// recurrences.
class PadicField {
 public:
  struct Impl;

  PadicField() = default;  // empty handle; usable only after assignment

  /// Validates and builds a descriptor. `eis_poly` coefficients are elements
  /// of the unramified subring given by their u-coordinates (size <= f).
  /// `guard < 0` selects the default 2 + ceil(64/(p-1)).
  static PadicField make(const Int& p, int f, int e,
                         std::vector<Int> unram_poly,
                         std::vector<std::vector<Int>> eis_poly, int N,
                         long long guard = -1);

  /// Q_p with uniformizer p (f = e = 1, eis = pi - p).
  static PadicField make_qp(const Int& p, int N, long long guard = -1);

  static long long default_guard(const Int& p, long long max_series_order);

  const Int& p() const;
  int f() const;
  int e() const;
  Int q() const;  // p^f
  int N() const;  // advertised precision cap (varpi digits)
  long long guard() const;
  long long base_digits() const;  // B
  const Int& base_modulus() const;  // p^B
  long long max_prec() const;  // e*B, the internal precision ceiling
  const std::vector<Int>& unram_poly() const;
  const std::vector<std::vector<Int>>& eis_poly() const;

  /// Structural equality (same p, f, e, polynomials, N and guard).
  bool same_as(const PadicField& other) const;
  /// Same mathematical field, ignoring N and guard.
  bool same_tower(const PadicField& other) const;

  PadicElem zero() const;
  PadicElem one() const;
  PadicElem from_int(const Int& v) const;
  PadicElem from_coords(std::vector<Int> coords, long long prec) const;
  /// The uniformizer varpi (the class of pi).
  PadicElem uniformizer() const;

  std::shared_ptr<const Impl> impl;

 private:
  explicit PadicField(std::shared_ptr<const Impl> i) : impl(std::move(i)) {}
};

/// Element of the residue field k_E = F_p[u]/(m(u)); coordinates mod p.
struct ResidueElem {
  std::vector<Int> coords;

  bool is_zero() const;
  bool operator==(const ResidueElem& o) const { return coords == o.coords; }
};

ResidueElem res_add(const PadicField& k, const ResidueElem& a,
                    const ResidueElem& b);
ResidueElem res_mul(const PadicField& k, const ResidueElem& a,
                    const ResidueElem& b);
ResidueElem res_neg(const PadicField& k, const ResidueElem& a);
ResidueElem res_inverse(const PadicField& k, const ResidueElem& a);
ResidueElem res_zero(const PadicField& k);
ResidueElem res_one(const PadicField& k);

/// Element of O_E known modulo varpi^prec. Coordinates c_{i,j} with respect
/// to the basis u^j pi^i are stored modulo p^B at index i*f + j. `prec` is
/// the guaranteed absolute varpi-adic precision; stored digits beyond it may
/// be stale after lossy operations and are never reported.
class PadicElem {
 public:
  PadicElem() = default;
  PadicElem(PadicField field, std::vector<Int> coords, long long prec);

  const PadicField& field() const { return field_; }
  const std::vector<Int>& coords() const { return coords_; }
  long long prec() const { return prec_; }
  /// Precision clamped to the descriptor cap N, as reported externally.
  long long reported_prec() const;

  bool is_zero_stored() const;  // all stored coordinates vanish

  PadicElem operator+(const PadicElem& o) const;
  PadicElem operator-(const PadicElem& o) const;
  PadicElem operator*(const PadicElem& o) const;
  PadicElem operator-() const;
  PadicElem pow(long long k) const;

  /// Caps the carried precision (never raises it).
  PadicElem with_prec(long long prec) const;

 private:
  PadicField field_;
  std::vector<Int> coords_;
  long long prec_ = 0;

  friend PadicElem mul_by_exact_pi_power(const PadicElem& x, long long k);
};

/// Exact varpi-adic valuation when it is below the carried precision,
/// otherwise AtLeast(prec).
Valuation valuation(const PadicElem& x);

/// val_p = val_varpi / e as an exact rational (exactness flag preserved).
std::pair<Rational, bool> valuation_p(const PadicElem& x);

/// Inverse of a unit (valuation exactly 0), by residue-field inversion
/// followed by Newton lifting; exact modulo the full stored modulus.
PadicElem invert(const PadicElem& x);

/// Image in k_E (coordinates mod (p, pi)).
ResidueElem residue(const PadicElem& x);

/// Multiplication by varpi^k for exact k >= 0 (absolute precision rises by k).
PadicElem mul_by_exact_pi_power(const PadicElem& x, long long k);

/// Exact division by varpi^t. Requires the stored element to be divisible;
/// absolute precision drops by t. Throws NotDivisible otherwise.
PadicElem div_by_pi_power(const PadicElem& x, long long t);

/// val(x - y) >= min(prec) -- equality at the joint carried precision.
bool eq_at_joint_prec(const PadicElem& x, const PadicElem& y);
/// val(x - y) >= t.
bool eq_at(const PadicElem& x, const PadicElem& y, long long t);

/// Embeds an element of Q_p (f = e = 1) into an extension descriptor with
/// the same p. Precision scales by the target ramification index.
PadicElem embed(const PadicElem& x, const PadicField& target);

void require_same_field(const PadicField& a, const PadicField& b,
                        const char* who);

}  // namespace padlift

#endif  // PADLIFT_PADIC_HPP_
