#ifndef PADLIFT_JSON_IO_HPP_
#define PADLIFT_JSON_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "padlift/lift_check.hpp"
#include "padlift/lubin_log.hpp"
#include "padlift/newton.hpp"
#include "padlift/weights.hpp"

namespace padlift {

/// nlohmann map-backed objects keep keys sorted, so every dump is
/// byte-deterministic for equal content.
using Json = nlohmann::json;

// Emitters. Arbitrary-size integers (p, coordinates, polynomial
// coefficients, determinants) are decimal strings; structural integers
// (shift, prec, window sizes, f, e, N) are plain JSON numbers.
Json to_json(const PadicField& k);
Json to_json(const PadicElem& x);
Json to_json(const TruncSeries& s);
Json to_json(const Valuation& v);
Json to_json(const ResidueSeries& r);
Json to_json(const LiftSpec& spec);
Json to_json(const ResidualEntry& e);
Json to_json(const CheckReport& rep);
Json to_json(const NormalizeResult& nr);
Json to_json(const LogSeries& A);
Json to_json(const NewtonPolygon& poly);
Json to_json(const WeightVector& w);

// Strict parsers: required keys must be present with the right type,
// unknown keys are rejected, and every complaint carries the JSON-pointer
// path of the offending node (Error::where()).
Json parse_json_text(const std::string& text, const std::string& what);
PadicField field_from_json(const Json& j, const std::string& path);
PadicElem elem_from_json(const Json& j, const PadicField& k,
                         const std::string& path);
TruncSeries series_from_json(const Json& j, const PadicField& k,
                             const std::string& path);
ResidueSeries residue_series_from_json(const Json& j, const PadicField& k,
                                       const std::string& path);
LiftSpec liftspec_from_json(const Json& j);
std::vector<Int> int_array_from_json(const Json& j, const std::string& path);

}  // namespace padlift

#endif  // PADLIFT_JSON_IO_HPP_
