// Acceptance battery: every numbered requirement below is exercised end to
// end and prints exactly one [PASS]/[FAIL] line. Residual-valuation
// thresholds are pinned as constants; the process exits nonzero when any
// line fails, and failing lines carry the first observed divergence.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "padlift/lift_check.hpp"
#include "padlift/lubin_log.hpp"
#include "padlift/lubin_tate.hpp"
#include "padlift/newton.hpp"
#include "padlift/norm_op.hpp"
#include "padlift/weights.hpp"
#include "support.hpp"

using namespace padlift;
using testsupport::compose_naive;
using testsupport::make_rng;
using testsupport::rand_below;
using testsupport::rand_elem;
using testsupport::rand_unit;

namespace {

// Pinned thresholds (varpi-adic residual valuations).
constexpr long long kCycloResidualFloor = 8;  // 1: full stored precision
constexpr long long kLtComposeFloor = 6;      // 2: [2]o[5] vs [10]
constexpr long long kNormExactFloor = 8;      // 4: N(T) = T
constexpr long long kNormOracleFloor = 6;     // 4: vs root product
constexpr long long kLogUnitFloor = 6;        // 5: coefficient units
constexpr long long kLogClearedFloor = 6;     // 5: cleared eigen residual
constexpr long long kFixedResidualFloor = 8;  // 7: P_b(a) - a
constexpr long long kRoundTripFloor = 6;      // 7: normalize round trip

std::string fmt_val(const Valuation& v) {
  return (v.at_least ? ">= " : "") + std::to_string(v.v);
}

// Specs that earlier criteria accepted, reused by the perturbation and
// character criteria so every statement refers to the same data.
struct Artifacts {
  std::vector<LiftSpec> accepted;
  std::vector<CheckReport> reports;
  std::vector<LiftSpec> normalized;
};

// --------------------------------------------------------------------------
// 1. Cyclotomic lifts for p in {2,3,5} are accepted with no attrition.

bool criterion1(Artifacts& art, std::vector<std::string>& notes) {
  auto rng = make_rng(2026);
  for (int pi : {2, 3, 5}) {
    Int p(pi);
    Int s = p + 1;
    Int u;
    do {
      u = rand_below(rng, Int(97)) + 2;
    } while (u % p == 0 || u == s || u == s * s || u == s * s * s ||
             u == s * s * s * s);
    auto k = PadicField::make_qp(p, 8, PadicField::default_guard(p, 64));
    auto spec = cyclotomic_lift(k, {s, s * s, u}, 64);
    auto rep = check_lift(spec);
    if (rep.verdict != Verdict::Accept) {
      notes.push_back("p = " + to_decimal(p) + ": verdict " +
                      verdict_name(rep.verdict));
      for (const auto& r : rep.reasons) notes.push_back("  " + r);
      return false;
    }
    if (rep.cocycle.empty()) {
      notes.push_back("p = " + to_decimal(p) + ": no product row was checked");
      return false;
    }
    for (const auto* list : {&rep.commutation, &rep.cocycle})
      for (const auto& e : *list)
        if (e.residual.lower() < kCycloResidualFloor) {
          notes.push_back("p = " + to_decimal(p) + ": " + e.label +
                          " residual " + fmt_val(e.residual) + " < " +
                          std::to_string(kCycloResidualFloor));
          return false;
        }
    if (rep.attrition != 0) {
      notes.push_back("p = " + to_decimal(p) + ": attrition " +
                      std::to_string(rep.attrition) + " != 0");
      return false;
    }
    art.accepted.push_back(std::move(spec));
    art.reports.push_back(std::move(rep));
  }
  notes.push_back("exponents {1+p, (1+p)^2, random unit}, N = 8, M = 64; "
                  "all residuals >= 8, attrition 0");
  return true;
}

// --------------------------------------------------------------------------
// 2. The 3T + T^3 endomorphism family over Q_3 is accepted and composes.

bool criterion2(Artifacts& art, std::vector<std::string>& notes) {
  auto k = make_lt_field(3, 1, 1, {}, {{-3}, {1}}, 8, 40);
  auto f = default_frobenius(k, 40);  // 3T + T^3
  auto spec = lubin_tate_lift(f, {Int(2), Int(5), Int(10)});
  auto rep = check_lift(spec);
  if (rep.verdict != Verdict::Accept) {
    notes.push_back("verdict " + std::string(verdict_name(rep.verdict)));
    for (const auto& r : rep.reasons) notes.push_back("  " + r);
    return false;
  }
  bool has_product = false;
  for (const auto& pr : spec.products)
    has_product = has_product || (pr[0] == "2" && pr[1] == "5");
  if (!has_product && spec.products.empty()) {
    notes.push_back("no (2,5,10) product row in the generated spec");
    return false;
  }

  const TruncSeries *F2 = nullptr, *F5 = nullptr, *F10 = nullptr;
  for (const auto& el : spec.elements) {
    if (el.label == "2") F2 = &el.F;
    if (el.label == "5") F5 = &el.F;
    if (el.label == "10") F10 = &el.F;
  }
  if (!F2 || !F5 || !F10) {
    notes.push_back("missing a labeled element");
    return false;
  }
  long long r = series_diff_val(compose(*F2, *F5), *F10);
  if (r < kLtComposeFloor) {
    notes.push_back("[2]o[5] vs [10] residual " + std::to_string(r) + " < " +
                    std::to_string(kLtComposeFloor));
    return false;
  }
  notes.push_back("M = 40 accepted; [2]o[5] = [10] with residual >= " +
                  std::to_string(r));
  art.accepted.push_back(std::move(spec));
  art.reports.push_back(std::move(rep));
  return true;
}

// --------------------------------------------------------------------------
// 3. Single-coefficient perturbations are rejected with a verified witness.

const ResidualEntry* first_failing(const CheckReport& rep, bool& is_cocycle,
                                   size_t& index) {
  for (size_t i = 0; i < rep.commutation.size(); ++i)
    if (!rep.commutation[i].ok) {
      is_cocycle = false;
      index = i;
      return &rep.commutation[i];
    }
  for (size_t i = 0; i < rep.cocycle.size(); ++i)
    if (!rep.cocycle[i].ok) {
      is_cocycle = true;
      index = i;
      return &rep.cocycle[i];
    }
  return nullptr;
}

const TruncSeries& element_by_label(const LiftSpec& spec,
                                    const std::string& label) {
  for (const auto& el : spec.elements)
    if (el.label == label) return el.F;
  throw Error(Errc::MalformedGroupData, "missing label " + label);
}

bool criterion3(const Artifacts& art, std::vector<std::string>& notes) {
  int tested = 0;
  for (const auto& base : art.accepted) {
    const auto& k = base.field;
    long long M = base.P.order_cap();
    // degree/exponent pairs covering both window ends and every j in 0..4;
    // a unit flip of the constant coefficient is excluded because it leaves
    // the checker's domain (rejected earlier, with no coefficient witness).
    struct Flip { size_t elem; long long deg; long long j; };
    const Flip flips[] = {{0, 0, 1},     {1, 1, 0}, {2, M / 2, 3},
                          {0, M - 1, 4}, {1, 2, 2}};
    for (const auto& fl : flips) {
      LiftSpec mod = base;
      auto cs = mod.elements[fl.elem].F.coeffs();
      cs[static_cast<size_t>(fl.deg)] =
          cs[static_cast<size_t>(fl.deg)] +
          mul_by_exact_pi_power(k.one(), fl.j);
      mod.elements[fl.elem].F = TruncSeries(k, 0, std::move(cs));

      std::string tag = "p = " + to_decimal(k.p()) + ", element " +
                        mod.elements[fl.elem].label + ", T^" +
                        std::to_string(fl.deg) + " + pi^" +
                        std::to_string(fl.j);
      auto rep = check_lift(mod);
      if (rep.verdict != Verdict::Reject) {
        notes.push_back(tag + ": verdict " + verdict_name(rep.verdict) +
                        ", expected Reject");
        return false;
      }
      bool is_cocycle = false;
      size_t idx = 0;
      const ResidualEntry* bad = first_failing(rep, is_cocycle, idx);
      if (!bad) {
        notes.push_back(tag + ": Reject carries no failing identity");
        return false;
      }

      // Brute-force recomputation of the failing identity: naive power
      // accumulation instead of Horner, then a direct scan with the checker's
      // rule (a certified exact valuation is provably nonzero, hence a
      // violation regardless of the reporting claim).
      TruncSeries diff = [&] {
        if (is_cocycle) {
          const auto& pr = mod.products[idx];
          return compose_naive(element_by_label(mod, pr[1]),
                               element_by_label(mod, pr[0])) -
                 element_by_label(mod, pr[2]);
        }
        const auto& F = mod.elements[idx].F;
        return compose_naive(F, mod.P) - compose_naive(mod.P, F);
      }();
      long long first = -1;
      long long min_certified = -1;
      for (long long d = diff.shift(); d < diff.order_cap(); ++d) {
        Valuation v = valuation(diff.coeff(d));
        if (v.at_least) continue;
        if (first < 0) first = d;
        if (min_certified < 0 || v.v < min_certified) min_certified = v.v;
      }
      if (first != bad->witness_index || bad->residual.at_least ||
          bad->residual.v != min_certified) {
        notes.push_back(tag + ": witness " +
                        std::to_string(bad->witness_index) + "/" +
                        fmt_val(bad->residual) + ", brute force " +
                        std::to_string(first) + "/" +
                        std::to_string(min_certified));
        return false;
      }
      ++tested;
    }
  }
  notes.push_back(std::to_string(tested) +
                  " perturbations across all accepted specs: every verdict "
                  "flipped to Reject with a matching witness");
  return true;
}

// --------------------------------------------------------------------------
// 4. Norm operator: exactness on T, root-product oracle, contraction.

bool criterion4(std::vector<std::string>& notes) {
  auto k = PadicField::make_qp(3, 8);
  auto P16 = binomial_series(k.from_int(3), 16);  // (1+T)^3 - 1
  auto id16 = TruncSeries::identity(k, 16);
  long long r = series_diff_val(norm_op(id16, P16), id16);
  if (r < kNormExactFloor) {
    notes.push_back("N(T) vs T residual " + std::to_string(r) + " < " +
                    std::to_string(kNormExactFloor));
    return false;
  }

  // Independent oracle: over Q_3(zeta_3) = Q_3(sqrt(-3)) the series
  // P(X) - P(T) factors through X = zeta^i (1+T) - 1, so the determinant
  // route must match the literal product over the three roots.
  auto P12 = binomial_series(k.from_int(3), 12);
  auto wd = weierstrass_prepare(P12, 12, -1, false);
  auto kz = PadicField::make(3, 1, 2, {}, {{3}, {0}, {1}}, 16);
  PadicElem zeta =
      (kz.from_int(-1) + kz.uniformizer()) * invert(kz.from_int(2));
  auto embed_series = [&](const TruncSeries& s) {
    std::vector<PadicElem> c;
    for (const auto& x : s.coeffs()) c.push_back(embed(x, kz));
    return TruncSeries(kz, s.shift(), std::move(c));
  };
  auto Pz = embed_series(P12);
  auto rng = make_rng(404);
  for (int t = 0; t < 100; ++t) {
    std::vector<PadicElem> hc;
    for (int j = 0; j < 12; ++j) hc.push_back(rand_elem(rng, k));
    TruncSeries h(k, 0, hc);
    auto lhs = compose(embed_series(norm_op(h, wd)), Pz);
    auto rhs = TruncSeries::constant(kz.one(), 12);
    PadicElem zi = kz.one();
    for (int i = 0; i < 3; ++i) {
      std::vector<PadicElem> gc(12, kz.zero());
      gc[0] = zi - kz.one();
      gc[1] = zi;
      rhs = rhs * compose(embed_series(h), TruncSeries(kz, 0, std::move(gc)));
      zi = zi * zeta;
    }
    long long rv = series_diff_val(lhs.truncated(7), rhs.truncated(7));
    if (rv < kNormOracleFloor) {
      notes.push_back("oracle trial " + std::to_string(t) + ": residual " +
                      std::to_string(rv) + " < " +
                      std::to_string(kNormOracleFloor));
      return false;
    }
  }

  // Contraction: norms of 1 + 3^kv * h land one digit deeper.
  auto P10 = binomial_series(k.from_int(3), 10);
  auto wd10 = weierstrass_prepare(P10, 10, -1, false);
  auto one = TruncSeries::constant(k.one(), 10);
  for (long long kv = 1; kv <= 3; ++kv) {
    for (int t = 0; t < 50; ++t) {
      std::vector<PadicElem> hc;
      for (int j = 0; j < 10; ++j)
        hc.push_back(mul_by_exact_pi_power(rand_elem(rng, k), kv));
      auto n = norm_op(one + TruncSeries(k, 0, std::move(hc)), wd10);
      long long rv = series_diff_val(n, one);
      if (rv < kv + 1) {
        notes.push_back("contraction k = " + std::to_string(kv) + ", trial " +
                        std::to_string(t) + ": residual " +
                        std::to_string(rv) + " < " + std::to_string(kv + 1));
        return false;
      }
    }
  }
  notes.push_back("N(T) = T at residual " + std::to_string(r) +
                  "; 100 oracle trials >= 6; contraction holds for "
                  "k in {1,2,3} on 50 series each");
  return true;
}

// --------------------------------------------------------------------------
// 5. Logarithm coefficients, cleared eigen relation, and the sparse clause.

bool criterion5(std::vector<std::string>& notes) {
  bool ok = true;
  auto k = PadicField::make_qp(3, 8, 64);
  auto A = logarithm(binomial_series(k.from_int(3), 33));
  for (long long n = 2; n <= 32; ++n) {
    long long v = p_valuation(Int(n), 3, 64);
    const ScaledElem& a = A.coeffs[static_cast<size_t>(n)];
    PadicElem expect = invert(k.from_int(Int(n) / pow_int(3, v)));
    if (n % 2 == 0) expect = -expect;  // a_n = (-1)^(n-1)/n
    if (a.shift != -v || !eq_at(a.unit, expect, kLogUnitFloor)) {
      notes.push_back("classical a_" + std::to_string(n) +
                      ": shift " + std::to_string(a.shift) + ", expected " +
                      std::to_string(-v));
      ok = false;
    }
  }
  if (A.residual < kLogClearedFloor) {
    notes.push_back("cleared eigen residual " + std::to_string(A.residual) +
                    " < " + std::to_string(kLogClearedFloor));
    ok = false;
  }
  auto er = eigen_check(A, binomial_series(k.from_int(4), 33), k.from_int(4));
  if (er.certified_violation || er.residual < kLogClearedFloor) {
    notes.push_back("(1+T)^4 - 1 eigen residual " +
                    std::to_string(er.residual));
    ok = false;
  }

  // Sparse clause, evaluated exactly as stated: for P = 3T + T^3 the
  // coefficients a_n should vanish away from n in {1, 3, 9, 27} and equal
  // 3^-m at n = 3^m.
  auto P = TruncSeries::from_ints(k, {0, 3, 0, 1}).extended(33, k.max_prec());
  auto B = logarithm(P);
  if (B.residual < kLogClearedFloor) {
    notes.push_back("3T + T^3 logarithm fails its own eigen relation: "
                    "residual " + std::to_string(B.residual));
    ok = false;
  }
  std::vector<std::string> sparse_bad;
  for (long long n = 2; n <= 32; ++n) {
    const ScaledElem& a = B.coeffs[static_cast<size_t>(n)];
    bool is_power = n == 3 || n == 9 || n == 27;
    if (is_power) {
      long long m = n == 3 ? 1 : n == 9 ? 2 : 3;
      if (a.shift != -m || !eq_at(a.unit, k.one(), kLogUnitFloor))
        sparse_bad.push_back("a_" + std::to_string(n) + " = pi^" +
                             std::to_string(a.shift) + " * unit (expected 3^-" +
                             std::to_string(m) + ")");
    } else if (!valuation(a.unit).at_least) {
      sparse_bad.push_back("a_" + std::to_string(n) + " = pi^" +
                           std::to_string(a.shift) +
                           " * unit, certified nonzero (expected 0)");
    }
  }
  if (!sparse_bad.empty()) {
    ok = false;
    notes.push_back("sparse clause fails for P = 3T + T^3 even though the "
                    "computed logarithm satisfies A(P) = 3A (residual " +
                    std::to_string(B.residual) + "):");
    for (size_t i = 0; i < sparse_bad.size() && i < 4; ++i)
      notes.push_back("  " + sparse_bad[i]);
    if (sparse_bad.size() > 4)
      notes.push_back("  ... " + std::to_string(sparse_bad.size() - 4) +
                      " more");
    notes.push_back("  the defining relation forces a_3 = 1/(3 - 27) = -1/24,"
                    " a_5 = 3/640, ...: the series with T^(3^m)/3^m "
                    "coefficients solves a different (formal-sum) equation");
  }
  return ok;
}

// --------------------------------------------------------------------------
// 6. Denominator bound: shifts never fall below (1 - n) * val(P'(0)).

bool criterion6(std::vector<std::string>& notes) {
  auto rng = make_rng(606);
  auto k = PadicField::make_qp(3, 8, 48);
  for (int t = 0; t < 20; ++t) {
    long long v1 = 1 + (t % 2);
    std::vector<PadicElem> cs;
    cs.push_back(k.zero());
    cs.push_back(mul_by_exact_pi_power(rand_unit(rng, k), v1));
    for (int j = 2; j < 24; ++j) cs.push_back(rand_elem(rng, k));
    auto A = logarithm(TruncSeries(k, 0, std::move(cs)));
    for (long long n = 2; n < 24; ++n) {
      long long shift = A.coeffs[static_cast<size_t>(n)].shift;
      if (shift < (1 - n) * v1) {
        notes.push_back("trial " + std::to_string(t) + ": a_" +
                        std::to_string(n) + " shift " +
                        std::to_string(shift) + " < " +
                        std::to_string((1 - n) * v1));
        return false;
      }
    }
  }
  notes.push_back("20 random series with val(P'(0)) in {1,2}, M = 24: every "
                  "coefficient stays in pi^(1-n) * integers");
  return true;
}

// --------------------------------------------------------------------------
// 7. Fixed points of conjugates and the normalization round trip.

bool criterion7(Artifacts& art, std::vector<std::string>& notes) {
  auto rng = make_rng(707);
  auto kc = PadicField::make_qp(3, 8);
  auto cyclo = cyclotomic_lift(kc, {Int(2), Int(4)}, 14);
  auto kl = make_lt_field(3, 1, 1, {}, {{-3}, {1}}, 8, 14);
  auto lt = lubin_tate_lift(default_frobenius(kl, 14), {Int(2), Int(5)});

  for (int t = 0; t < 50; ++t) {
    const LiftSpec& base = (t % 2 == 0) ? cyclo : lt;
    const auto& k = base.field;
    auto b = mul_by_exact_pi_power(rand_unit(rng, k), 1 + (t % 2));
    auto shift_by = [&](const TruncSeries& s) {
      auto moved = taylor_shift(s, b);
      auto cs = moved.coeffs();
      cs[0] = cs[0] - b;
      return TruncSeries(k, 0, std::move(cs));
    };
    LiftSpec conj;
    conj.field = k;
    conj.products = base.products;
    conj.P = shift_by(base.P);
    for (const auto& el : base.elements)
      conj.elements.push_back({el.label, shift_by(el.F)});

    PadicElem a = fixed_point(conj.P);
    Valuation res = valuation(evaluate(conj.P, a) - a);
    if (res.lower() < kFixedResidualFloor) {
      notes.push_back("trial " + std::to_string(t) + ": P_b(a) - a has "
                      "valuation " + fmt_val(res));
      return false;
    }

    auto nr = normalize_lift(conj);
    // Taylor-shift claims decay toward the window end, so the round trip is
    // compared on the first half.
    auto half = [&](const TruncSeries& s) { return s.truncated(8); };
    if (series_diff_val(half(nr.spec.P), half(base.P)) < kRoundTripFloor) {
      notes.push_back("trial " + std::to_string(t) + ": P round trip below " +
                      std::to_string(kRoundTripFloor));
      return false;
    }
    for (size_t i = 0; i < base.elements.size(); ++i)
      if (series_diff_val(half(nr.spec.elements[i].F),
                          half(base.elements[i].F)) < kRoundTripFloor) {
        notes.push_back("trial " + std::to_string(t) + ": element " +
                        base.elements[i].label + " round trip below " +
                        std::to_string(kRoundTripFloor));
        return false;
      }
    if (t < 6) art.normalized.push_back(nr.spec);
  }
  notes.push_back("50 conjugates T -> T + b: fixed-point residuals >= 8, "
                  "normalization round trips at >= 6");
  return true;
}

// --------------------------------------------------------------------------
// 8. Weight classifier against the determinant, and the singular search.

bool criterion8(std::vector<std::string>& notes) {
  for (long long d : {2, 3, 5}) {
    std::vector<Int> a(static_cast<size_t>(d), 0);
    long long checked = 0;
    for (;;) {
      WeightVector w = make_weights(a);
      bool zero_det = circulant_det(w) == 0;
      bool all0 = true, all_eq = true;
      for (const auto& x : a) {
        all0 = all0 && x == 0;
        all_eq = all_eq && x == a[0];
      }
      WeightClass c = classify_weights(w);
      bool agree = all0 ? (c == WeightClass::ZeroMap && zero_det)
                 : all_eq ? (c == WeightClass::TraceLine && zero_det)
                          : (c == WeightClass::Bijective && !zero_det);
      if (!agree) {
        std::string vec;
        for (const auto& x : a) vec += to_decimal(x) + ",";
        notes.push_back("d = " + std::to_string(d) + ", weights (" + vec +
                        "): class " + weight_class_name(c) +
                        ", determinant zero = " + (zero_det ? "yes" : "no"));
        return false;
      }
      ++checked;
      size_t i = 0;
      while (i < a.size() && a[i] == 4) a[i++] = 0;
      if (i == a.size()) break;
      a[i] += 1;
    }
    if (checked != pow_int(5, d)) {
      notes.push_back("d = " + std::to_string(d) + ": enumerated " +
                      std::to_string(checked) + " vectors");
      return false;
    }
  }

  auto hit = search_singular_nonconstant(4, 1);
  if (!hit || hit->a != std::vector<Int>{0, 1, 0, 1}) {
    notes.push_back("d = 4, bound 1: expected (0,1,0,1)");
    return false;
  }
  if (search_singular_nonconstant(3, 3)) {
    notes.push_back("d = 3, bound 3: expected no singular nonconstant vector");
    return false;
  }
  notes.push_back("all 5^d vectors agree for d in {2,3,5}; search finds "
                  "(0,1,0,1) at d = 4 and nothing at prime d");
  return true;
}

// --------------------------------------------------------------------------
// 9. Character table: unit values, exact multiplicativity, P'(0) != 0.

bool criterion9(const Artifacts& art, std::vector<std::string>& notes) {
  size_t hom_rows = 0;
  auto inspect = [&](const CheckReport& rep, const std::string& tag) {
    for (bool u : rep.character_is_unit)
      if (!u) {
        notes.push_back(tag + ": non-unit linear coefficient");
        return false;
      }
    for (const auto& e : rep.character_hom) {
      // "exact" = indistinguishable from zero at the full joint claim
      if (!e.ok || !e.residual.at_least || e.residual.v < e.claim) {
        notes.push_back(tag + ": " + e.label + " residual " +
                        fmt_val(e.residual) + " below claim " +
                        std::to_string(e.claim));
        return false;
      }
      ++hom_rows;
    }
    return true;
  };

  for (size_t i = 0; i < art.reports.size(); ++i)
    if (!inspect(art.reports[i], "accepted spec " + std::to_string(i)))
      return false;

  for (size_t i = 0; i < art.normalized.size(); ++i) {
    auto rep = check_lift(art.normalized[i]);
    std::string tag = "normalized spec " + std::to_string(i);
    if (rep.verdict != Verdict::Accept) {
      notes.push_back(tag + ": verdict " + verdict_name(rep.verdict));
      return false;
    }
    if (!rep.p1_certified || rep.p1_val.at_least) {
      notes.push_back(tag + ": P'(0) not certified nonzero (valuation " +
                      fmt_val(rep.p1_val) + ")");
      return false;
    }
    if (!inspect(rep, tag)) return false;
  }
  notes.push_back(std::to_string(hom_rows) +
                  " product rows multiplicative at full precision; P'(0) "
                  "certified nonzero on every normalized spec");
  return true;
}

}  // namespace

int main() {
  Artifacts art;
  struct Row {
    int id;
    const char* title;
    bool ok;
    std::vector<std::string> notes;
  };
  std::vector<Row> rows;

  auto run = [&](int id, const char* title, auto&& fn) {
    Row row{id, title, false, {}};
    try {
      row.ok = fn(row.notes);
    } catch (const std::exception& e) {
      row.notes.push_back(std::string("exception: ") + e.what());
    }
    rows.push_back(std::move(row));
  };

  run(1, "cyclotomic lifts accepted at full precision (p = 2, 3, 5)",
      [&](auto& n) { return criterion1(art, n); });
  run(2, "3T + T^3 endomorphism family accepted over Q_3",
      [&](auto& n) { return criterion2(art, n); });
  run(3, "single-coefficient perturbations rejected with verified witnesses",
      [&](auto& n) { return criterion3(art, n); });
  run(4, "norm operator: exact on T, matches root product, contracts units",
      [&](auto& n) { return criterion4(n); });
  run(5, "logarithm coefficients and eigen relation",
      [&](auto& n) { return criterion5(n); });
  run(6, "logarithm denominators bounded by pi^(1-n)",
      [&](auto& n) { return criterion6(n); });
  run(7, "fixed points and normalization round trips",
      [&](auto& n) { return criterion7(art, n); });
  run(8, "circulant classifier agrees with the determinant everywhere",
      [&](auto& n) { return criterion8(n); });
  run(9, "characters are units and exactly multiplicative",
      [&](auto& n) { return criterion9(art, n); });

  bool all_ok = true;
  for (const auto& r : rows) {
    std::cout << (r.ok ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title
              << "\n";
    for (const auto& n : r.notes) std::cout << "       " << n << "\n";
    all_ok = all_ok && r.ok;
  }
  std::cout << (all_ok ? "all criteria passed"
                       : "at least one criterion failed")
            << "\n";
  return all_ok ? 0 : 1;
}
