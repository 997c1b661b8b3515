// Command-line front end: parses job descriptions, dispatches to the
// library, and prints one machine-readable JSON report per invocation.
// Exit codes: 0 success / Accept, 2 usage or input error, 3 Reject,
// 4 precision was insufficient to decide.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "padlift/error.hpp"
#include "padlift/json_io.hpp"
#include "padlift/lubin_log.hpp"
#include "padlift/lubin_tate.hpp"
#include "padlift/newton.hpp"
#include "padlift/norm_op.hpp"
#include "padlift/weights.hpp"

namespace {

using namespace padlift;

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kReject = 3;
constexpr int kInconclusive = 4;

int exit_for(const Error& e) {
  switch (e.code()) {
    case Errc::PrecisionExhausted:
    case Errc::PrecisionAmbiguous:
      return kInconclusive;
    default:
      return kUsage;
  }
}

// Input arguments accept a file path, `-` for standard input, or a JSON
// document given inline (recognized by its opening brace).
std::string read_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw Error(Errc::BadInput, "cannot open input file: " + arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_doc(const std::string& arg, const std::string& what) {
  return parse_json_text(read_input(arg), what);
}

void require_keys(const Json& j, const std::vector<std::string>& keys,
                  const std::string& what) {
  if (!j.is_object())
    throw Error(Errc::SchemaViolation, what + " must be a JSON object", "");
  for (const auto& k : keys)
    if (!j.contains(k))
      throw Error(Errc::SchemaViolation, "missing key in " + what + " at /" + k,
                  "/" + k);
  for (const auto& item : j.items()) {
    bool known = false;
    for (const auto& k : keys) known = known || item.key() == k;
    if (!known)
      throw Error(Errc::SchemaViolation,
                  "unknown key in " + what + " at /" + item.key(),
                  "/" + item.key());
  }
}

// {"field": ..., "series": ...} — the document shape shared by the
// single-series subcommands (log, norm input halves, fixed-point, polygon).
struct SeriesDoc {
  PadicField field;
  TruncSeries series;

  static SeriesDoc parse(const Json& j) {
    require_keys(j, {"field", "series"}, "series document");
    PadicField k = field_from_json(j.at("field"), "/field");
    return {k, series_from_json(j.at("series"), k, "/series")};
  }
};

Json series_doc_json(const PadicField& k, const TruncSeries& s) {
  return Json{{"field", to_json(k)}, {"series", to_json(s)}};
}

// ---------------------------------------------------------------------------
// Human rendering: a plain-text walk over the same JSON document, so the two
// formats can never disagree about content.

bool all_scalar(const Json& a) {
  for (const auto& x : a)
    if (x.is_object() || x.is_array()) return false;
  return true;
}

std::string scalar_text(const Json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

void render_human(std::ostream& os, const Json& j, const std::string& label,
                  int indent, bool verbose) {
  std::string pad(static_cast<size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    os << pad << label << ":\n";
    for (const auto& item : j.items())
      render_human(os, item.value(), item.key(), indent + 1, verbose);
  } else if (j.is_array()) {
    if (all_scalar(j) && (verbose || j.size() <= 16)) {
      os << pad << label << ": [";
      for (size_t i = 0; i < j.size(); ++i)
        os << (i ? ", " : "") << scalar_text(j[i]);
      os << "]\n";
    } else if (!verbose && j.size() > 16) {
      os << pad << label << ": [" << j.size() << " entries]\n";
    } else {
      os << pad << label << ":\n";
      for (size_t i = 0; i < j.size(); ++i)
        render_human(os, j[i], "[" + std::to_string(i) + "]", indent + 1,
                     verbose);
    }
  } else {
    os << pad << label << ": " << scalar_text(j) << "\n";
  }
}

void emit(const Json& doc, const std::string& format, bool verbose) {
  if (format == "human") {
    for (const auto& item : doc.items())
      render_human(std::cout, item.value(), item.key(), 0, verbose);
  } else {
    std::cout << doc.dump(2) << "\n";
  }
}

std::vector<Int> parse_int_list(const std::vector<std::string>& parts,
                                const std::string& what) {
  std::vector<Int> out;
  for (const auto& p : parts) {
    std::stringstream ss(p);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty())
        throw Error(Errc::BadInput, "empty entry in " + what + " list");
      out.push_back(from_decimal(tok));
    }
  }
  if (out.empty()) throw Error(Errc::BadInput, what + " list is empty");
  return out;
}

// Overrides may only tighten: a job never runs above the precision or the
// window its input already carries.
void cap_spec(LiftSpec& spec, long long N, long long M) {
  if (N >= 0) {
    if (N > spec.field.N())
      throw Error(Errc::BadInput,
                  "--N exceeds the field's precision cap of " +
                      std::to_string(spec.field.N()));
    spec.P = spec.P.with_prec(N);
    for (auto& el : spec.elements) el.F = el.F.with_prec(N);
  }
  if (M >= 0) {
    if (M > spec.P.order_cap())
      throw Error(Errc::BadInput,
                  "--M exceeds the stored window of " +
                      std::to_string(spec.P.order_cap()));
    spec.P = spec.P.truncated(M - spec.P.shift());
    for (auto& el : spec.elements)
      el.F = el.F.truncated(std::min(M - el.F.shift(), el.F.len()));
  }
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Accept: return kOk;
    case Verdict::Reject: return kReject;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kUsage;
}

// ---------------------------------------------------------------------------
// selftest: a seeded, deterministic sweep of cross-module properties.

struct SelfCheck {
  std::string name;
  bool ok;
};

SelfCheck check_field_arithmetic(std::mt19937_64& rng) {
  PadicField k = PadicField::make_qp(3, 8);
  bool ok = true;
  for (int t = 0; t < 50 && ok; ++t) {
    PadicElem x = k.from_int(Int(rng() % 100000));
    PadicElem y = k.from_int(Int(rng() % 100000));
    PadicElem z = k.from_int(Int(rng() % 100000));
    ok = eq_at_joint_prec((x + y) * z, x * z + y * z);
  }
  return {"field-distributivity", ok};
}

SelfCheck check_unit_inversion(std::mt19937_64& rng) {
  PadicField k = PadicField::make_qp(5, 8);
  bool ok = true;
  for (int t = 0; t < 50 && ok; ++t) {
    Int v = Int(rng() % 100000);
    if (v % 5 == 0) v += 1;
    PadicElem u = k.from_int(v);
    ok = eq_at_joint_prec(u * invert(u), k.one());
  }
  return {"unit-inversion", ok};
}

SelfCheck check_composition_inverse(std::mt19937_64& rng) {
  PadicField k = PadicField::make_qp(5, 6);
  bool ok = true;
  for (int t = 0; t < 10 && ok; ++t) {
    std::vector<Int> cs{0, 1};
    for (int i = 2; i < 8; ++i) cs.push_back(Int(rng() % 40));
    TruncSeries f = TruncSeries::from_ints(k, cs);
    TruncSeries g = comp_inverse(f);
    ok = series_diff_val(compose(f, g), TruncSeries::identity(k, 8)) >= 5;
  }
  return {"composition-inverse", ok};
}

SelfCheck check_cyclotomic_accept(std::mt19937_64&) {
  LiftSpec spec = cyclotomic_lift(PadicField::make_qp(3, 6),
                                  {Int(4), Int(7), Int(28)}, 16);
  return {"cyclotomic-accept", check_lift(spec).verdict == Verdict::Accept};
}

SelfCheck check_norm_fixes_identity(std::mt19937_64&) {
  PadicField k = PadicField::make_qp(3, 8);
  TruncSeries P = binomial_series(k.from_int(3), 12);
  TruncSeries r = norm_op(TruncSeries::identity(k, 8), P);
  return {"norm-fixes-identity",
          series_diff_val(r, TruncSeries::identity(k, 8)) >= 5};
}

SelfCheck check_logarithm_eigen(std::mt19937_64&) {
  PadicField k = PadicField::make_qp(3, 6);
  LogSeries A = logarithm(binomial_series(k.from_int(3), 10));
  return {"logarithm-eigenvalue", A.residual >= 5};
}

SelfCheck check_circulant_classifier(std::mt19937_64& rng) {
  bool ok = true;
  const long long ds[] = {2, 3, 5};
  for (int t = 0; t < 30 && ok; ++t) {
    long long d = ds[rng() % 3];
    std::vector<Int> a;
    for (long long i = 0; i < d; ++i) a.push_back(Int(rng() % 4));
    WeightVector w = make_weights(a);
    WeightClass c = classify_weights(w);
    bool zero = circulant_det(w) == 0;
    bool all0 = true, eq = true;
    for (long long i = 0; i < d; ++i) {
      all0 = all0 && a[static_cast<size_t>(i)] == 0;
      eq = eq && a[static_cast<size_t>(i)] == a[0];
    }
    if (all0) ok = c == WeightClass::ZeroMap && zero;
    else if (eq) ok = c == WeightClass::TraceLine && zero;
    else ok = c == WeightClass::Bijective && !zero;
  }
  return {"circulant-classifier", ok};
}

int run_selftest(unsigned long long seed, const std::string& format,
                 bool verbose) {
  std::mt19937_64 rng(seed);
  std::vector<SelfCheck> checks;
  checks.push_back(check_field_arithmetic(rng));
  checks.push_back(check_unit_inversion(rng));
  checks.push_back(check_composition_inverse(rng));
  checks.push_back(check_cyclotomic_accept(rng));
  checks.push_back(check_norm_fixes_identity(rng));
  checks.push_back(check_logarithm_eigen(rng));
  checks.push_back(check_circulant_classifier(rng));

  bool all_ok = true;
  Json arr = Json::array();
  for (const auto& c : checks) {
    arr.push_back(Json{{"name", c.name}, {"ok", c.ok}});
    all_ok = all_ok && c.ok;
  }
  emit(Json{{"seed", seed}, {"checks", arr}, {"ok", all_ok}}, format, verbose);
  return all_ok ? kOk : kReject;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "padlift — exact verification of candidate Frobenius/Galois lifts on "
      "truncated p-adic power series"};
  app.require_subcommand(1);
  // Let global options (--format, -v) appear after the subcommand too.
  app.fallthrough();

  std::string format = "json";
  bool verbose = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "human"}))
      ->capture_default_str();
  app.add_flag("-v,--verbose", verbose,
               "Expand long arrays in human output");

  // check -------------------------------------------------------------------
  auto* cmd_check = app.add_subcommand(
      "check", "Verify a lift specification and report a verdict");
  std::string check_in = "-";
  long long check_N = -1, check_M = -1;
  cmd_check->add_option("input", check_in,
                        "Spec file, inline JSON, or - for stdin");
  cmd_check->add_option("--N", check_N, "Cap the working precision");
  cmd_check->add_option("--M", check_M, "Cap the series window");

  // normalize ---------------------------------------------------------------
  auto* cmd_norm_spec = app.add_subcommand(
      "normalize", "Conjugate a spec by T -> T + a so that P fixes 0");
  std::string normalize_in = "-";
  cmd_norm_spec->add_option("input", normalize_in,
                            "Spec file, inline JSON, or - for stdin");

  // lubin-tate --------------------------------------------------------------
  auto* cmd_lt = app.add_subcommand(
      "lubin-tate", "Generate [a] endomorphisms for pi*T + T^q");
  std::string lt_p = "3";
  std::string lt_field;
  std::vector<std::string> lt_units;
  long long lt_N = 8, lt_M = 16;
  bool lt_series_only = false;
  cmd_lt->add_option("--p", lt_p, "Prime (builds Q_p when --field is absent)");
  cmd_lt->add_option("--field", lt_field,
                     "Field descriptor (file, inline JSON, or -)");
  cmd_lt->add_option("--units", lt_units, "Comma-separated unit multipliers")
      ->required();
  cmd_lt->add_option("--N", lt_N, "Precision cap for the generated field");
  cmd_lt->add_option("--M", lt_M, "Series window");
  cmd_lt->add_flag("--series-only", lt_series_only,
                   "Emit just [a] for a single unit instead of a full spec");

  // cyclotomic --------------------------------------------------------------
  auto* cmd_cyc = app.add_subcommand(
      "cyclotomic", "Generate the cyclotomic spec (1+T)^p - 1 over Q_p");
  std::string cyc_p = "3";
  std::vector<std::string> cyc_exps;
  long long cyc_N = 8, cyc_M = 32;
  cmd_cyc->add_option("--p", cyc_p, "Prime");
  cmd_cyc->add_option("--exponents", cyc_exps,
                      "Comma-separated unit exponents")
      ->required();
  cmd_cyc->add_option("--N", cyc_N, "Precision cap");
  cmd_cyc->add_option("--M", cyc_M, "Series window");

  // log ---------------------------------------------------------------------
  auto* cmd_log = app.add_subcommand(
      "log", "Lubin logarithm A with A(P(T)) = P'(0) * A(T)");
  std::string log_in = "-";
  long long log_M = -1;
  cmd_log->add_option("input", log_in,
                      "Series document (field + series), file/JSON/-");
  cmd_log->add_option("--M", log_M, "Number of logarithm coefficients");

  // norm --------------------------------------------------------------------
  auto* cmd_norm = app.add_subcommand(
      "norm", "Apply the norm operator attached to P to a series h");
  std::string norm_in = "-";
  long long norm_MS = -1, norm_MX = -1;
  cmd_norm->add_option("input", norm_in,
                       "Document {field, P, h}, file/JSON/-");
  cmd_norm->add_option("--MS", norm_MS, "S-window of the splitting");
  cmd_norm->add_option("--MX", norm_MX, "X-window of the splitting");

  // fixed-point -------------------------------------------------------------
  auto* cmd_fix = app.add_subcommand(
      "fixed-point", "Small fixed point of P (Newton iteration)");
  std::string fix_in = "-";
  cmd_fix->add_option("input", fix_in,
                      "Series document (field + series), file/JSON/-");

  // newton-polygon ----------------------------------------------------------
  auto* cmd_poly = app.add_subcommand(
      "newton-polygon", "Certified lower convex hull of (k, val c_k)");
  std::string poly_in = "-";
  long long poly_cap = -1;
  cmd_poly->add_option("input", poly_in,
                       "Series document (field + series), file/JSON/-");
  cmd_poly->add_option("--degree-cap", poly_cap,
                       "Highest degree considered (default: stored window)");

  // circulant ---------------------------------------------------------------
  auto* cmd_circ = app.add_subcommand(
      "circulant", "Circulant determinant of a weight vector");
  std::vector<std::string> circ_weights;
  long long circ_d = -1;
  cmd_circ->add_option("--weights", circ_weights, "Comma-separated weights")
      ->required();
  cmd_circ->add_option("--d", circ_d, "Group order (must match the list)");

  // classify-weights ---------------------------------------------------------
  auto* cmd_classify = app.add_subcommand(
      "classify-weights", "Image classification of a prime-order weight map");
  std::vector<std::string> classify_weights_arg;
  cmd_classify
      ->add_option("--weights", classify_weights_arg,
                   "Comma-separated weights")
      ->required();

  // search-singular ----------------------------------------------------------
  auto* cmd_search = app.add_subcommand(
      "search-singular",
      "Smallest nonconstant weight vector killed by the primitive block");
  long long search_d = 0, search_bound = 0;
  cmd_search->add_option("--d", search_d, "Group order")->required();
  cmd_search->add_option("--bound", search_bound, "Entry bound")->required();

  // selftest ----------------------------------------------------------------
  auto* cmd_self = app.add_subcommand(
      "selftest", "Seeded randomized cross-module property sweep");
  unsigned long long self_seed = 0;
  cmd_self->add_option("--seed", self_seed, "RNG seed")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? kOk : kUsage;
  }

  try {
    if (cmd_check->parsed()) {
      LiftSpec spec = liftspec_from_json(load_doc(check_in, "lift spec"));
      cap_spec(spec, check_N, check_M);
      CheckReport rep = check_lift(spec);
      emit(to_json(rep), format, verbose);
      return verdict_exit(rep.verdict);
    }

    if (cmd_norm_spec->parsed()) {
      LiftSpec spec = liftspec_from_json(load_doc(normalize_in, "lift spec"));
      emit(to_json(normalize_lift(spec)), format, verbose);
      return kOk;
    }

    if (cmd_lt->parsed()) {
      std::vector<Int> units = parse_int_list(lt_units, "--units");
      PadicField k;
      if (!lt_field.empty()) {
        k = field_from_json(load_doc(lt_field, "field descriptor"), "");
      } else {
        Int p = from_decimal(lt_p);
        k = make_lt_field(p, 1, 1, {}, {{-p}, {1}}, lt_N, lt_M);
      }
      FrobeniusSeries f = default_frobenius(k, lt_M);
      if (lt_series_only) {
        if (units.size() != 1)
          throw Error(Errc::BadInput, "--series-only expects a single unit");
        TruncSeries s = lt_endomorphism(f, k.from_int(units[0]));
        emit(series_doc_json(k, s), format, verbose);
      } else {
        emit(to_json(lubin_tate_lift(f, units)), format, verbose);
      }
      return kOk;
    }

    if (cmd_cyc->parsed()) {
      Int p = from_decimal(cyc_p);
      std::vector<Int> exps = parse_int_list(cyc_exps, "--exponents");
      PadicField k = PadicField::make_qp(
          p, static_cast<int>(cyc_N), PadicField::default_guard(p, cyc_M));
      emit(to_json(cyclotomic_lift(k, exps, cyc_M)), format, verbose);
      return kOk;
    }

    if (cmd_log->parsed()) {
      SeriesDoc doc = SeriesDoc::parse(load_doc(log_in, "series document"));
      if (log_M > doc.series.len())
        throw Error(Errc::BadInput, "--M exceeds the stored window");
      emit(to_json(logarithm(doc.series, log_M)), format, verbose);
      return kOk;
    }

    if (cmd_norm->parsed()) {
      Json j = load_doc(norm_in, "norm document");
      require_keys(j, {"field", "P", "h"}, "norm document");
      PadicField k = field_from_json(j.at("field"), "/field");
      TruncSeries P = series_from_json(j.at("P"), k, "/P");
      TruncSeries h = series_from_json(j.at("h"), k, "/h");
      emit(series_doc_json(k, norm_op(h, P, norm_MS, norm_MX)), format,
           verbose);
      return kOk;
    }

    if (cmd_fix->parsed()) {
      SeriesDoc doc = SeriesDoc::parse(load_doc(fix_in, "series document"));
      PadicElem a = fixed_point(doc.series);
      emit(Json{{"field", to_json(doc.field)},
                {"value", to_json(a)},
                {"valuation", to_json(valuation(a))}},
           format, verbose);
      return kOk;
    }

    if (cmd_poly->parsed()) {
      SeriesDoc doc = SeriesDoc::parse(load_doc(poly_in, "series document"));
      long long cap =
          poly_cap >= 0 ? poly_cap : doc.series.order_cap() - 1;
      emit(to_json(newton_polygon(doc.series, cap)), format, verbose);
      return kOk;
    }

    if (cmd_circ->parsed()) {
      WeightVector w =
          make_weights(parse_int_list(circ_weights, "--weights"));
      if (circ_d >= 0 && circ_d != w.d)
        throw Error(Errc::BadInput, "--d does not match the weight count");
      Json doc{{"d", w.d},
               {"weights", to_json(w)},
               {"determinant", to_decimal(circulant_det(w))}};
      try {
        doc["class"] = weight_class_name(classify_weights(w));
      } catch (const Error& e) {
        if (e.code() != Errc::DNotPrime) throw;
      }
      emit(doc, format, verbose);
      return kOk;
    }

    if (cmd_classify->parsed()) {
      WeightVector w =
          make_weights(parse_int_list(classify_weights_arg, "--weights"));
      emit(Json{{"d", w.d},
                {"weights", to_json(w)},
                {"class", weight_class_name(classify_weights(w))}},
           format, verbose);
      return kOk;
    }

    if (cmd_search->parsed()) {
      auto found = search_singular_nonconstant(search_d, search_bound);
      Json doc{{"d", search_d},
               {"bound", search_bound},
               {"found", found.has_value()}};
      if (found) doc["weights"] = to_json(*found);
      emit(doc, format, verbose);
      return kOk;
    }

    if (cmd_self->parsed()) return run_selftest(self_seed, format, verbose);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  return kUsage;
}
