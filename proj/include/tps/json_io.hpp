#ifndef TPS_JSON_IO_HPP
#define TPS_JSON_IO_HPP

#include "tps/constellation.hpp"
#include "tps/multi_exponent.hpp"
#include "tps/semigroup.hpp"
#include "tps/series.hpp"

#include <json.hpp>

#include <string>

namespace tps {

using Json = nlohmann::ordered_json;

Json exponent_to_json(const MultiExponent& e);
MultiExponent exponent_from_json(const nlohmann::json& j);

/// {"box": [...], "terms": [{"exponent": [...], "coefficient": "12"}, ...]}
/// with terms in graded-lex order; coefficients are decimal strings so that
/// arbitrary-precision values survive the trip.
Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

/// [{"exponent": [...], "multiplicity": m}, ...]
Json factored_to_json(const FactoredRationalSeries& f);
FactoredRationalSeries factored_from_json(const nlohmann::json& j);

/// {"dimension": d, "generators": [[...]], "valuations": [[...]]}
SemigroupSpec semigroup_from_json(const nlohmann::json& j);
SemigroupSpec parse_semigroup(const std::string& json_text);
Json semigroup_to_json(const SemigroupSpec& spec);

Json constellation_to_json(const Constellation& c);

Json degeneracy_to_json(const DegeneracyReport& report, const RegularityCertificate& cert);

/// Reads a whole file; throws input_error when it cannot be opened.
std::string read_file(const std::string& path);

} // namespace tps

#endif
