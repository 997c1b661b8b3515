#include "padlift/json_io.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "padlift/error.hpp"

namespace padlift {

namespace {

[[noreturn]] void fail(const std::string& msg, const std::string& path) {
  throw Error(Errc::SchemaViolation, msg + " at " + path, path);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail("expected an object", path);
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + '"', path);
  return *it;
}

void only_keys(const Json& j, std::set<std::string> allowed,
               std::set<std::string> optional, const std::string& path) {
  if (!j.is_object()) fail("expected an object", path);
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (allowed.count(it.key()) || optional.count(it.key())) continue;
    fail("unknown key \"" + it.key() + '"', path + "/" + it.key());
  }
  for (const auto& key : allowed)
    if (!j.contains(key)) fail("missing key \"" + key + '"', path);
}

long long small_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail("expected an integer", path);
  return j.get<long long>();
}

Int big_int(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return from_decimal(j.get<std::string>());
    } catch (const std::exception&) {
      fail("not a decimal integer string", path);
    }
  }
  fail("expected a decimal string or integer", path);
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail("expected an array", path);
  return j;
}

std::vector<Int> big_int_array(const Json& j, const std::string& path) {
  array_at(j, path);
  std::vector<Int> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(big_int(j[i], path + "/" + std::to_string(i)));
  return out;
}

Json rational_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

Json to_json(const PadicField& k) {
  Json unram = Json::array();
  for (const Int& c : k.unram_poly()) unram.push_back(to_decimal(c));
  Json eis = Json::array();
  for (const auto& cs : k.eis_poly()) {
    Json row = Json::array();
    for (const Int& c : cs) row.push_back(to_decimal(c));
    eis.push_back(std::move(row));
  }
  return Json{{"p", to_decimal(k.p())}, {"f", k.f()},          {"e", k.e()},
              {"unram_poly", unram},    {"eis_poly", eis},     {"N", k.N()},
              {"guard", k.guard()}};
}

Json to_json(const PadicElem& x) {
  Json coords = Json::array();
  for (const Int& c : x.coords()) coords.push_back(to_decimal(c));
  return Json{{"coords", coords}, {"prec", x.reported_prec()}};
}

Json to_json(const TruncSeries& s) {
  Json coeffs = Json::array();
  long long prec = s.field().max_prec();
  for (long long i = 0; i < s.len(); ++i) {
    PadicElem c = s.coeff(s.shift() + i);
    prec = std::min(prec, c.reported_prec());
    coeffs.push_back(to_json(c));
  }
  return Json{{"shift", s.shift()},
              {"coeffs", coeffs},
              {"prec", prec},
              {"M", s.order_cap()}};
}

Json to_json(const Valuation& v) {
  return Json{{"v", v.v}, {"at_least", v.at_least}};
}

Json to_json(const ResidueSeries& r) {
  Json coeffs = Json::array();
  for (const auto& c : r.coeffs) {
    Json coords = Json::array();
    for (const Int& x : c.coords) coords.push_back(to_decimal(x));
    coeffs.push_back(std::move(coords));
  }
  return Json{{"shift", r.shift}, {"coeffs", coeffs}};
}

Json to_json(const LiftSpec& spec) {
  Json elements = Json::array();
  for (const auto& el : spec.elements)
    elements.push_back(Json{{"label", el.label}, {"F", to_json(el.F)}});
  Json products = Json::array();
  for (const auto& pr : spec.products)
    products.push_back(Json::array({pr[0], pr[1], pr[2]}));
  Json out{{"field", to_json(spec.field)},
           {"P", to_json(spec.P)},
           {"elements", elements},
           {"products", products}};
  if (!spec.residue_action.empty()) {
    Json ra = Json::array();
    for (const auto& [label, series] : spec.residue_action)
      ra.push_back(Json{{"label", label}, {"series", to_json(series)}});
    out["residue_action"] = std::move(ra);
  }
  return out;
}

Json to_json(const ResidualEntry& e) {
  return Json{{"label", e.label},
              {"residual", to_json(e.residual)},
              {"claim", e.claim},
              {"ok", e.ok},
              {"witness_index", e.witness_index}};
}

namespace {

Json entries_json(const std::vector<ResidualEntry>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_json(e));
  return out;
}

}  // namespace

Json to_json(const CheckReport& rep) {
  Json character = Json::array();
  for (const auto& [label, f1] : rep.character)
    character.push_back(Json{{"label", label}, {"f1", to_json(f1)}});
  Json collisions = Json::array();
  for (const auto& [a, b] : rep.collisions)
    collisions.push_back(Json::array({a, b}));
  return Json{{"frobenius_reduction_ok", rep.frobenius_reduction_ok},
              {"commutation", entries_json(rep.commutation)},
              {"cocycle", entries_json(rep.cocycle)},
              {"residue_match", entries_json(rep.residue_match)},
              {"character", character},
              {"character_is_unit", rep.character_is_unit},
              {"character_hom", entries_json(rep.character_hom)},
              {"collisions", collisions},
              {"p1_val", to_json(rep.p1_val)},
              {"p1_certified", rep.p1_certified},
              {"working_prec", rep.working_prec},
              {"attrition", rep.attrition},
              {"verdict", verdict_name(rep.verdict)},
              {"reasons", rep.reasons}};
}

Json to_json(const NormalizeResult& nr) {
  Json residuals = Json::array();
  for (const auto& [label, v] : nr.const_term_residuals)
    residuals.push_back(Json{{"label", label}, {"valuation", to_json(v)}});
  return Json{{"spec", to_json(nr.spec)},
              {"a", to_json(nr.a)},
              {"const_term_residuals", residuals}};
}

Json to_json(const LogSeries& A) {
  Json coeffs = Json::array();
  for (const auto& c : A.coeffs)
    coeffs.push_back(Json{{"shift", c.shift}, {"unit", to_json(c.unit)}});
  return Json{{"pi1", to_json(A.pi1)},
              {"pi1_val", A.pi1_val},
              {"coeffs", coeffs},
              {"residual", A.residual},
              {"prec", A.prec}};
}

Json to_json(const NewtonPolygon& poly) {
  Json out = Json::array();
  for (const auto& v : poly.vertices)
    out.push_back(Json{{"deg", v.deg}, {"valp", rational_string(v.valp)}});
  return out;
}

Json to_json(const WeightVector& w) {
  Json out = Json::array();
  for (const Int& x : w.a) out.push_back(to_decimal(x));
  return out;
}

Json parse_json_text(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw Error(Errc::SchemaViolation, what + ": not valid JSON", "");
  return j;
}

PadicField field_from_json(const Json& j, const std::string& path) {
  only_keys(j, {"p", "f", "e", "unram_poly", "eis_poly", "N"}, {"guard"},
            path);
  Int p = big_int(member(j, "p", path), path + "/p");
  long long f = small_int(member(j, "f", path), path + "/f");
  long long e = small_int(member(j, "e", path), path + "/e");
  auto unram = big_int_array(member(j, "unram_poly", path), path + "/unram_poly");
  const Json& ej = array_at(member(j, "eis_poly", path), path + "/eis_poly");
  std::vector<std::vector<Int>> eis;
  for (size_t i = 0; i < ej.size(); ++i)
    eis.push_back(big_int_array(ej[i], path + "/eis_poly/" + std::to_string(i)));
  long long N = small_int(member(j, "N", path), path + "/N");
  long long guard = -1;
  if (j.contains("guard"))
    guard = small_int(j["guard"], path + "/guard");
  if (f < 1 || e < 1 || N < 1)
    fail("f, e and N must be positive", path);
  try {
    return PadicField::make(p, static_cast<int>(f), static_cast<int>(e),
                            std::move(unram), std::move(eis),
                            static_cast<int>(N), guard);
  } catch (const Error& err) {
    throw Error(err.code(), std::string(err.what()) + " at " + path, path);
  }
}

PadicElem elem_from_json(const Json& j, const PadicField& k,
                         const std::string& path) {
  only_keys(j, {"coords", "prec"}, {}, path);
  auto coords = big_int_array(member(j, "coords", path), path + "/coords");
  if (coords.size() != static_cast<size_t>(k.f()) * k.e())
    fail("expected " + std::to_string(k.f() * k.e()) + " coordinates",
         path + "/coords");
  long long prec = small_int(member(j, "prec", path), path + "/prec");
  if (prec < 0 || prec > k.max_prec())
    fail("prec outside [0, " + std::to_string(k.max_prec()) + "]",
         path + "/prec");
  return k.from_coords(std::move(coords), prec);
}

TruncSeries series_from_json(const Json& j, const PadicField& k,
                             const std::string& path) {
  only_keys(j, {"shift", "coeffs", "prec", "M"}, {}, path);
  long long shift = small_int(member(j, "shift", path), path + "/shift");
  const Json& cj = array_at(member(j, "coeffs", path), path + "/coeffs");
  std::vector<PadicElem> coeffs;
  for (size_t i = 0; i < cj.size(); ++i)
    coeffs.push_back(elem_from_json(cj[i], k, path + "/coeffs/" + std::to_string(i)));
  long long M = small_int(member(j, "M", path), path + "/M");
  if (M != shift + static_cast<long long>(coeffs.size()))
    fail("M must equal shift + number of coefficients", path + "/M");
  long long prec = small_int(member(j, "prec", path), path + "/prec");
  if (prec < 0) fail("prec must be nonnegative", path + "/prec");
  long long minp = k.max_prec();
  for (const auto& c : coeffs) minp = std::min(minp, c.reported_prec());
  if (prec > minp)
    fail("prec exceeds the precision carried by the coefficients",
         path + "/prec");
  TruncSeries s(k, shift, std::move(coeffs));
  // The per-coefficient precisions are authoritative; the series-level value
  // only weakens them when it is strictly smaller than their minimum.
  return prec < minp ? s.with_prec(prec) : s;
}

ResidueSeries residue_series_from_json(const Json& j, const PadicField& k,
                                       const std::string& path) {
  only_keys(j, {"shift", "coeffs"}, {}, path);
  ResidueSeries r;
  r.field = k;
  r.shift = small_int(member(j, "shift", path), path + "/shift");
  const Json& cj = array_at(member(j, "coeffs", path), path + "/coeffs");
  for (size_t i = 0; i < cj.size(); ++i) {
    std::string cpath = path + "/coeffs/" + std::to_string(i);
    ResidueElem c{big_int_array(cj[i], cpath)};
    if (c.coords.size() != static_cast<size_t>(k.f()))
      fail("expected " + std::to_string(k.f()) + " residue coordinates", cpath);
    for (auto& x : c.coords) x = mod_reduce(x, k.p());
    r.coeffs.push_back(std::move(c));
  }
  return r;
}

LiftSpec liftspec_from_json(const Json& j) {
  only_keys(j, {"field", "P", "elements", "products"}, {"residue_action"},
            "");
  LiftSpec spec;
  spec.field = field_from_json(member(j, "field", ""), "/field");
  spec.P = series_from_json(member(j, "P", ""), spec.field, "/P");
  const Json& els = array_at(member(j, "elements", ""), "/elements");
  for (size_t i = 0; i < els.size(); ++i) {
    std::string epath = "/elements/" + std::to_string(i);
    only_keys(els[i], {"label", "F"}, {}, epath);
    const Json& lj = member(els[i], "label", epath);
    if (!lj.is_string()) fail("label must be a string", epath + "/label");
    spec.elements.push_back(
        {lj.get<std::string>(),
         series_from_json(member(els[i], "F", epath), spec.field, epath + "/F")});
  }
  const Json& prods = array_at(member(j, "products", ""), "/products");
  for (size_t i = 0; i < prods.size(); ++i) {
    std::string ppath = "/products/" + std::to_string(i);
    if (!prods[i].is_array() || prods[i].size() != 3)
      fail("expected a [g, h, gh] triple", ppath);
    std::array<std::string, 3> triple;
    for (size_t t = 0; t < 3; ++t) {
      if (!prods[i][t].is_string())
        fail("labels must be strings", ppath + "/" + std::to_string(t));
      triple[t] = prods[i][t].get<std::string>();
    }
    spec.products.push_back(std::move(triple));
  }
  if (j.contains("residue_action")) {
    const Json& ra = array_at(j["residue_action"], "/residue_action");
    for (size_t i = 0; i < ra.size(); ++i) {
      std::string rpath = "/residue_action/" + std::to_string(i);
      only_keys(ra[i], {"label", "series"}, {}, rpath);
      const Json& lj = member(ra[i], "label", rpath);
      if (!lj.is_string()) fail("label must be a string", rpath + "/label");
      spec.residue_action.emplace_back(
          lj.get<std::string>(),
          residue_series_from_json(member(ra[i], "series", rpath), spec.field,
                                   rpath + "/series"));
    }
  }
  return spec;
}

std::vector<Int> int_array_from_json(const Json& j, const std::string& path) {
  return big_int_array(j, path);
}

}  // namespace padlift
