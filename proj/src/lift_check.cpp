#include "padlift/lift_check.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "padlift/error.hpp"

namespace padlift {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Accept: return "Accept";
    case Verdict::Reject: return "Reject";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

PadicElem character(const TruncSeries& F) { return F.coeff(1); }

namespace {

/// Judges whether a difference series is indistinguishable from zero. Any
/// coefficient with a certified (exact) valuation is a genuine violation,
/// since it is provably nonzero no matter what the unstored digits are.
ResidualEntry judge_zero(std::string label, const TruncSeries& D,
                         long long N) {
  ResidualEntry ent;
  ent.label = std::move(label);
  ent.ok = true;
  long long claim = D.field().max_prec();
  Valuation resid = Valuation::bound(D.field().max_prec());
  for (long long j = D.shift(); j < D.order_cap(); ++j) {
    PadicElem c = D.coeff(j);
    claim = std::min(claim, c.prec());
    Valuation v = valuation(c);
    resid = val_min(resid, v);
    if (!v.at_least && ent.ok) {
      ent.ok = false;
      ent.witness_index = j;
    }
  }
  ent.claim = std::min(claim, static_cast<long long>(N));
  if (resid.at_least) resid = Valuation::bound(std::min(resid.v, ent.claim));
  ent.residual = resid;
  return ent;
}

ResidualEntry judge_scalar(std::string label, const PadicElem& d,
                           long long N) {
  ResidualEntry ent;
  ent.label = std::move(label);
  ent.claim = std::min(d.prec(), static_cast<long long>(N));
  Valuation v = valuation(d);
  ent.ok = v.at_least;
  if (!ent.ok) ent.witness_index = 0;
  if (v.at_least) v = Valuation::bound(std::min(v.v, ent.claim));
  ent.residual = v;
  return ent;
}

std::string fail_text(const ResidualEntry& e) {
  return e.label + ": coefficient " + std::to_string(e.witness_index) +
         " has valuation " + e.residual.str() + " below claim " +
         std::to_string(e.claim);
}

}  // namespace

CheckReport check_lift(const LiftSpec& spec) {
  const auto& k = spec.field;
  const long long N = k.N();
  CheckReport rep;

  std::map<std::string, size_t> index;
  for (size_t i = 0; i < spec.elements.size(); ++i) {
    if (!index.emplace(spec.elements[i].label, i).second)
      throw Error(Errc::MalformedGroupData,
                  "duplicate label '" + spec.elements[i].label + "'");
  }
  auto lookup = [&](const std::string& label) -> const LiftElement& {
    auto it = index.find(label);
    if (it == index.end())
      throw Error(Errc::MalformedGroupData,
                  "product references unknown label '" + label + "'");
    return spec.elements[it->second];
  };
  for (const auto& pr : spec.products)
    for (const auto& lab : pr) lookup(lab);
  for (const auto& ra : spec.residue_action) lookup(ra.first);

  if (spec.P.shift() != 0)
    throw Error(Errc::BadInput, "P must be a power series");
  if (spec.P.len() < 2)
    throw Error(Errc::BadInput, "P needs at least two coefficients");
  for (const auto& el : spec.elements) {
    if (el.F.shift() != 0)
      throw Error(Errc::BadInput,
                  "element '" + el.label + "' must be a power series");
    if (el.F.len() < 2)
      throw Error(Errc::BadInput,
                  "element '" + el.label + "' needs at least two coefficients");
  }

  bool reject = false;
  bool inconclusive = false;

  // Every series must send the open unit disk to itself; a unit constant
  // term violates that outright (and makes composition meaningless).
  auto small_const = [&](const TruncSeries& s, const std::string& what) {
    Valuation v = valuation(s.coeff(0));
    if (v.lower() >= 1) return true;
    reject = true;
    rep.reasons.push_back(what + " has constant term of valuation " + v.str());
    return false;
  };
  bool p_ok = small_const(spec.P, "P");
  std::vector<bool> el_ok;
  el_ok.reserve(spec.elements.size());
  for (const auto& el : spec.elements)
    el_ok.push_back(small_const(el.F, "element '" + el.label + "'"));

  // Condition: P reduces to the q-power map on the residue field.
  Int q_int = k.q();
  long long q = q_int > (Int(1) << 40) ? (1LL << 40)
                                       : q_int.convert_to<long long>();
  if (spec.P.len() <= q) {
    rep.frobenius_reduction_ok = false;
    inconclusive = true;
    rep.reasons.push_back("window too short to certify the T^q reduction");
  } else if (p_ok) {
    rep.frobenius_reduction_ok =
        res_series_is_monomial(reduce_mod_p(spec.P), q, res_one(k));
    if (!rep.frobenius_reduction_ok) {
      reject = true;
      rep.reasons.push_back("P does not reduce to T^q mod the maximal ideal");
    }
  }

  long long working = N;
  auto record = [&](std::vector<ResidualEntry>& where, ResidualEntry ent) {
    working = std::min(working, ent.claim);
    if (!ent.ok) {
      reject = true;
      rep.reasons.push_back(fail_text(ent));
    }
    where.push_back(std::move(ent));
  };

  // Condition: each F_g commutes with P.
  for (size_t i = 0; i < spec.elements.size(); ++i) {
    const auto& el = spec.elements[i];
    if (!el_ok[i] || !p_ok) continue;
    long long W = std::min(el.F.len(), spec.P.len());
    auto lhs = compose(el.F.truncated(W), spec.P.truncated(W));
    auto rhs = compose(spec.P.truncated(W), el.F.truncated(W));
    record(rep.commutation, judge_zero("commute[" + el.label + "]",
                                       lhs - rhs, N));
  }

  // Condition: the sampled multiplication table holds, F_h(F_g) = F_gh.
  for (const auto& pr : spec.products) {
    const auto& g = lookup(pr[0]);
    const auto& h = lookup(pr[1]);
    const auto& gh = lookup(pr[2]);
    if (!el_ok[index[pr[0]]]) continue;
    long long W = std::min({g.F.len(), h.F.len(), gh.F.len()});
    auto composite = compose(h.F.truncated(W), g.F.truncated(W));
    record(rep.cocycle,
           judge_zero("cocycle[" + pr[0] + "*" + pr[1] + "=" + pr[2] + "]",
                      composite - gh.F.truncated(W), N));
  }

  // Optional condition: prescribed residue action.
  for (const auto& ra : spec.residue_action) {
    const auto& el = lookup(ra.first);
    ResidueSeries red = reduce_mod_p(el.F);
    const ResidueSeries& want = ra.second;
    ResidualEntry ent;
    ent.label = "residue[" + ra.first + "]";
    ent.claim = 1;
    ent.ok = res_series_eq(red, want);
    if (ent.ok) {
      ent.residual = Valuation::bound(1);
    } else {
      ent.residual = Valuation::exact(0);
      long long lo = std::min(red.shift, want.shift);
      long long hi = std::max(red.shift + red.len(), want.shift + want.len());
      auto at = [](const ResidueSeries& f, long long d) {
        if (d < f.shift || d >= f.shift + f.len()) return res_zero(f.field);
        return f.coeffs[static_cast<size_t>(d - f.shift)];
      };
      for (long long d = lo; d < hi; ++d)
        if (!(at(red, d) == at(want, d))) {
          ent.witness_index = d;
          break;
        }
      reject = true;
      rep.reasons.push_back(ent.label + ": reduction differs at degree " +
                            std::to_string(ent.witness_index));
    }
    rep.residue_match.push_back(std::move(ent));
  }

  // Character data: linear coefficients and their multiplicativity. Failures
  // here are already violations of the table (they are the degree-one part
  // of the cocycle condition) but are reported separately.
  for (const auto& el : spec.elements) {
    PadicElem f1 = character(el.F);
    rep.character.emplace_back(el.label, f1);
    rep.character_is_unit.push_back(valuation(f1).is_zero_exact());
  }
  for (size_t i = 0; i < rep.character.size(); ++i)
    for (size_t j = i + 1; j < rep.character.size(); ++j) {
      Valuation v = valuation(rep.character[i].second -
                              rep.character[j].second);
      if (v.at_least)
        rep.collisions.emplace_back(rep.character[i].first,
                                    rep.character[j].first);
    }
  for (const auto& pr : spec.products) {
    PadicElem d = character(lookup(pr[0]).F) * character(lookup(pr[1]).F) -
                  character(lookup(pr[2]).F);
    record(rep.character_hom,
           judge_scalar("char[" + pr[0] + "*" + pr[1] + "=" + pr[2] + "]", d,
                        N));
  }

  rep.p1_val = valuation(spec.P.coeff(1));
  rep.p1_certified = !rep.p1_val.at_least;

  rep.working_prec = working;
  rep.attrition = std::max(0LL, N - working);

  if (reject) {
    rep.verdict = Verdict::Reject;
  } else {
    if (!rep.p1_certified) {
      inconclusive = true;
      rep.reasons.push_back("P'(0) is indistinguishable from zero");
    }
    if (working < 1) {
      inconclusive = true;
      rep.reasons.push_back("no varpi digits survive the comparisons");
    }
    rep.verdict = inconclusive ? Verdict::Inconclusive : Verdict::Accept;
  }
  return rep;
}

namespace {

TruncSeries conjugate(const TruncSeries& s, const PadicElem& a) {
  auto shifted = taylor_shift(s, a);
  auto cs = shifted.coeffs();
  cs[0] = cs[0] - a;
  return TruncSeries(s.field(), 0, std::move(cs));
}

}  // namespace

NormalizeResult normalize_lift(const LiftSpec& spec) {
  PadicElem a = fixed_point(spec.P);
  LiftSpec out;
  out.field = spec.field;
  out.P = conjugate(spec.P, a);
  out.products = spec.products;
  // val(a) >= 1, so reducing mod the maximal ideal commutes with the shift
  // and any prescribed residue action carries over unchanged.
  out.residue_action = spec.residue_action;
  NormalizeResult res{std::move(out), a, {}};
  for (const auto& el : spec.elements) {
    TruncSeries F = conjugate(el.F, a);
    res.const_term_residuals.emplace_back(el.label, valuation(F.coeff(0)));
    res.spec.elements.push_back({el.label, std::move(F)});
  }
  return res;
}

LeadingTermReport leading_term_report(const LiftSpec& spec) {
  const auto& k = spec.field;
  LeadingTermReport rep;
  for (long long j = std::max(spec.P.shift(), 0LL); j < spec.P.order_cap();
       ++j) {
    if (!valuation(spec.P.coeff(j)).at_least) {
      rep.k = j;
      rep.pi_k = spec.P.coeff(j);
      break;
    }
  }
  for (const auto& el : spec.elements) {
    LeadingTermEntry ent{el.label, character(el.F), -1, false};
    for (long long j = 0; j < el.F.len(); ++j) {
      PadicElem d = el.F.coeff(j);
      if (j == 1) d = d - k.one();
      if (!valuation(d).at_least) {
        ent.lowest_nonidentity_degree = j;
        break;
      }
    }
    if (rep.k >= 0) {
      PadicElem c = *rep.pi_k * (ent.f1.pow(rep.k) - ent.f1);
      ent.constraint_ok = valuation(c).at_least;
    }
    rep.entries.push_back(std::move(ent));
  }
  return rep;
}

}  // namespace padlift
