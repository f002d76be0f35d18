#include "tps/json_io.hpp"

#include "tps/errors.hpp"

#include <fstream>
#include <sstream>

namespace tps {

Json exponent_to_json(const MultiExponent& e) {
    Json out = Json::array();
    for (std::int64_t x : e) out.push_back(x);
    return out;
}

MultiExponent exponent_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw input_error("expected an array of integers");
    std::vector<std::int64_t> entries;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw input_error("expected an array of integers");
        entries.push_back(x.get<std::int64_t>());
    }
    return MultiExponent(std::move(entries));
}

Json series_to_json(const TruncatedSeries& s) {
    Json out;
    out["box"] = exponent_to_json(s.box().bounds());
    Json terms = Json::array();
    for (const auto& [e, c] : s.sorted_terms()) {
        Json term;
        term["exponent"] = exponent_to_json(e);
        term["coefficient"] = c.str();
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
    try {
        TruncatedSeries out{TruncationBox(exponent_from_json(j.at("box")))};
        for (const auto& term : j.at("terms"))
            out.add_term(exponent_from_json(term.at("exponent")),
                         Integer(term.at("coefficient").get<std::string>()));
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed series document: ") + e.what());
    }
}

Json factored_to_json(const FactoredRationalSeries& f) {
    Json out = Json::array();
    for (const auto& [exponent, multiplicity] : f.factors()) {
        Json factor;
        factor["exponent"] = exponent_to_json(exponent);
        factor["multiplicity"] = multiplicity;
        out.push_back(std::move(factor));
    }
    return out;
}

FactoredRationalSeries factored_from_json(const nlohmann::json& j) {
    try {
        std::vector<FactoredRationalSeries::Factor> factors;
        for (const auto& factor : j)
            factors.push_back({exponent_from_json(factor.at("exponent")),
                               factor.at("multiplicity").get<std::int64_t>()});
        return FactoredRationalSeries(std::move(factors));
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed factored series document: ") + e.what());
    }
}

SemigroupSpec semigroup_from_json(const nlohmann::json& j) {
    try {
        std::vector<MultiExponent> generators, valuations;
        for (const auto& g : j.at("generators")) generators.push_back(exponent_from_json(g));
        for (const auto& v : j.at("valuations")) valuations.push_back(exponent_from_json(v));
        return make_semigroup_spec(j.at("dimension").get<std::int64_t>(), std::move(generators),
                                   std::move(valuations));
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed semigroup document: ") + e.what());
    }
}

SemigroupSpec parse_semigroup(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("JSON parse failure: ") + e.what());
    }
    return semigroup_from_json(doc);
}

Json semigroup_to_json(const SemigroupSpec& spec) {
    Json out;
    out["dimension"] = spec.dimension;
    Json generators = Json::array();
    for (const auto& g : spec.generators) generators.push_back(exponent_to_json(g));
    out["generators"] = std::move(generators);
    Json valuations = Json::array();
    for (const auto& v : spec.valuations) valuations.push_back(exponent_to_json(v));
    out["valuations"] = std::move(valuations);
    return out;
}

Json constellation_to_json(const Constellation& c) {
    Json out;
    out["dimension"] = c.dimension;
    Json points = Json::array();
    for (const auto& p : c.points) {
        Json point;
        point["parent"] = p.parent ? Json(*p.parent) : Json(nullptr);
        point["weight"] = p.weight ? Json(*p.weight) : Json(nullptr);
        points.push_back(std::move(point));
    }
    out["points"] = std::move(points);
    return out;
}

Json degeneracy_to_json(const DegeneracyReport& report, const RegularityCertificate& cert) {
    Json out;
    Json distinct = Json::array();
    for (const auto& col : report.distinct_columns) distinct.push_back(exponent_to_json(col));
    out["distinct_columns"] = std::move(distinct);
    out["repeated_column"] =
        report.repeated_column ? exponent_to_json(*report.repeated_column) : Json(nullptr);
    out["k"] = report.multiplicity_k;
    out["distinct_weights"] = report.distinct_weight_count;
    out["degenerate"] = report.degenerate;
    out["regular"] = cert.regular;
    Json divisors = Json::array();
    for (const auto& d : cert.elementary_divisors) divisors.push_back(d.str());
    out["elementary_divisors"] = std::move(divisors);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace tps
