#include "tps/constellation.hpp"

#include "tps/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tps {

std::int64_t Constellation::level(std::size_t index) const {
    std::int64_t depth = 0;
    while (points[index].parent) {
        index = static_cast<std::size_t>(*points[index].parent);
        ++depth;
    }
    return depth;
}

std::int64_t Constellation::distinct_weight_count() const {
    std::set<std::int64_t> weights;
    for (const Point& p : points)
        if (p.weight) weights.insert(*p.weight);
    return static_cast<std::int64_t>(weights.size());
}

ConstellationParseResult validate_constellation(Constellation candidate) {
    ConstellationParseResult result;
    auto fail = [&](const std::string& msg) { result.violations.push_back(msg); };

    if (candidate.dimension < 2) fail("dimension must be >= 2");
    if (candidate.points.empty()) fail("constellation has no points");
    for (std::size_t j = 0; j < candidate.points.size(); ++j) {
        const Constellation::Point& p = candidate.points[j];
        if (j == 0) {
            if (p.parent) fail("point 0 must be the root (no parent)");
            if (p.weight) fail("point 0 must not carry a weight");
            continue;
        }
        if (!p.parent) {
            fail("point " + std::to_string(j) + " has no parent; the origin must be unique");
            continue;
        }
        if (*p.parent < 0 || *p.parent >= static_cast<std::int64_t>(j))
            fail("point " + std::to_string(j) + " references parent " +
                 std::to_string(*p.parent) + " (must be an earlier point)");
        if (!p.weight) {
            fail("point " + std::to_string(j) + " has no weight");
            continue;
        }
        if (*p.weight < 1 || *p.weight > candidate.dimension)
            fail("point " + std::to_string(j) + " has weight " + std::to_string(*p.weight) +
                 " outside 1.." + std::to_string(candidate.dimension));
    }
    if (result.violations.empty()) {
        std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> edge_seen;
        for (std::size_t j = 1; j < candidate.points.size(); ++j) {
            const auto key = std::make_pair(*candidate.points[j].parent,
                                            *candidate.points[j].weight);
            auto [it, inserted] = edge_seen.emplace(key, j);
            if (!inserted)
                fail("points " + std::to_string(it->second) + " and " + std::to_string(j) +
                     " are both children of point " + std::to_string(key.first) +
                     " with weight " + std::to_string(key.second));
        }
    }
    if (result.violations.empty()) result.constellation = std::move(candidate);
    return result;
}

ConstellationParseResult parse_constellation(const std::string& json_text) {
    ConstellationParseResult result;
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        result.violations.push_back(std::string("JSON parse failure: ") + e.what());
        return result;
    }
    Constellation candidate;
    try {
        candidate.dimension = doc.at("dimension").get<std::int64_t>();
        for (const auto& entry : doc.at("points")) {
            Constellation::Point p;
            if (entry.contains("parent") && !entry.at("parent").is_null())
                p.parent = entry.at("parent").get<std::int64_t>();
            if (entry.contains("weight") && !entry.at("weight").is_null())
                p.weight = entry.at("weight").get<std::int64_t>();
            candidate.points.push_back(p);
        }
    } catch (const nlohmann::json::exception& e) {
        result.violations.push_back(std::string("malformed constellation document: ") + e.what());
        return result;
    }
    return validate_constellation(std::move(candidate));
}

Constellation require_constellation(const std::string& json_text) {
    ConstellationParseResult result = parse_constellation(json_text);
    if (result.ok()) return *std::move(result.constellation);
    std::string msg = "invalid constellation:";
    for (const auto& v : result.violations) msg += "\n  " + v;
    throw input_error(msg);
}

std::vector<ExponentMap> exponent_maps(const Constellation& c) {
    const std::size_t d = static_cast<std::size_t>(c.dimension);
    std::vector<ExponentMap> maps;
    maps.reserve(c.point_count());
    for (std::size_t j = 0; j < c.point_count(); ++j) {
        if (!c.points[j].parent) {
            ExponentMap identity(d, std::vector<std::int64_t>(d, 0));
            for (std::size_t i = 0; i < d; ++i) identity[i][i] = 1;
            maps.push_back(std::move(identity));
            continue;
        }
        ExponentMap map = maps[static_cast<std::size_t>(*c.points[j].parent)];
        std::vector<std::int64_t> row_sum(d, 0);
        for (const auto& row : map)
            for (std::size_t i = 0; i < d; ++i) row_sum[i] += row[i];
        map[static_cast<std::size_t>(*c.points[j].weight - 1)] = std::move(row_sum);
        maps.push_back(std::move(map));
    }
    return maps;
}

ValuationMatrix valuation_matrix(const Constellation& c) {
    const std::size_t d = static_cast<std::size_t>(c.dimension);
    ValuationMatrix m;
    for (const ExponentMap& map : exponent_maps(c)) {
        std::vector<std::int64_t> row(d, 0);
        for (const auto& map_row : map)
            for (std::size_t i = 0; i < d; ++i) row[i] += map_row[i];
        m.entries.push_back(std::move(row));
    }
    return m;
}

MultiExponent ValuationMatrix::column(std::size_t i) const {
    std::vector<std::int64_t> col(rows());
    for (std::size_t j = 0; j < rows(); ++j) col[j] = entries[j][i];
    return MultiExponent(std::move(col));
}

namespace {

std::vector<ValueVector> distinct_columns_of(const ValuationMatrix& m,
                                             std::vector<std::size_t>* multiplicities) {
    std::vector<ValueVector> distinct;
    for (std::size_t i = 0; i < m.cols(); ++i) {
        const ValueVector col = m.column(i);
        auto it = std::find(distinct.begin(), distinct.end(), col);
        if (it == distinct.end()) {
            distinct.push_back(col);
            if (multiplicities) multiplicities->push_back(1);
        } else if (multiplicities) {
            ++(*multiplicities)[static_cast<std::size_t>(it - distinct.begin())];
        }
    }
    return distinct;
}

IntMatrix columns_as_matrix(const std::vector<ValueVector>& columns, std::size_t rows) {
    IntMatrix out(rows, std::vector<std::int64_t>(columns.size(), 0));
    for (std::size_t s = 0; s < columns.size(); ++s)
        for (std::size_t j = 0; j < rows; ++j) out[j][s] = columns[s][j];
    return out;
}

} // namespace

DegeneracyReport degeneracy_report(const ValuationMatrix& m, const Constellation& c) {
    DegeneracyReport report;
    std::vector<std::size_t> multiplicities;
    report.distinct_columns = distinct_columns_of(m, &multiplicities);
    const std::int64_t d = static_cast<std::int64_t>(m.cols());
    const std::int64_t s = static_cast<std::int64_t>(report.distinct_columns.size());
    report.degenerate = s < d;
    report.distinct_weight_count = c.distinct_weight_count();

    if (report.degenerate != (report.distinct_weight_count <= d - 2))
        throw structural_violation(
            "degeneracy does not match the distinct-weight criterion: s=" + std::to_string(s) +
            ", d=" + std::to_string(d) +
            ", distinct weights=" + std::to_string(report.distinct_weight_count));

    std::size_t repeated_classes = 0;
    for (std::size_t idx = 0; idx < multiplicities.size(); ++idx)
        if (multiplicities[idx] > 1) {
            ++repeated_classes;
            report.repeated_index = idx;
            report.repeated_column = report.distinct_columns[idx];
            report.multiplicity_k = static_cast<std::int64_t>(multiplicities[idx]);
        }
    if (report.degenerate) {
        if (repeated_classes != 1)
            throw structural_violation("degenerate matrix must have exactly one repeated "
                                       "column class, found " +
                                       std::to_string(repeated_classes));
        if (report.multiplicity_k != d - s + 1)
            throw structural_violation("repeated-column multiplicity " +
                                       std::to_string(report.multiplicity_k) +
                                       " differs from d-s+1 = " + std::to_string(d - s + 1));
    } else {
        if (repeated_classes != 0)
            throw structural_violation("non-degenerate matrix with a repeated column");
        report.multiplicity_k = 1;
    }

    // no dependencies among the distinct columns beyond the duplicates
    const std::vector<Integer> divisors =
        smith_normal_form(columns_as_matrix(report.distinct_columns, m.rows()));
    const std::size_t rank = static_cast<std::size_t>(
        std::count_if(divisors.begin(), divisors.end(), [](const Integer& x) { return x != 0; }));
    if (rank != static_cast<std::size_t>(s))
        throw structural_violation("distinct columns are linearly dependent (rank " +
                                   std::to_string(rank) + " of " + std::to_string(s) + ")");
    return report;
}

RegularityCertificate regularity_check(const ValuationMatrix& m) {
    RegularityCertificate cert;
    const std::vector<ValueVector> distinct = distinct_columns_of(m, nullptr);
    cert.elementary_divisors = smith_normal_form(columns_as_matrix(distinct, m.rows()));
    cert.regular = is_unimodular_basis(cert.elementary_divisors);
    return cert;
}

std::optional<std::vector<std::int64_t>> solve_cone_membership(const ValuationMatrix& m,
                                                               const ValueVector& v) {
    if (v.size() != m.rows()) throw input_error("value vector rank does not match the matrix");
    const std::vector<ValueVector> distinct = distinct_columns_of(m, nullptr);
    const auto solution =
        solve_full_column_rank(columns_as_matrix(distinct, m.rows()), v.entries());
    if (!solution) return std::nullopt;
    return as_nonnegative_integers(*solution);
}

std::int64_t closed_form_N(const ValuationMatrix& m, const DegeneracyReport& report,
                           const ValueVector& v) {
    const auto lambda = solve_cone_membership(m, v);
    if (!lambda) return 0;
    if (!report.degenerate) return 1;
    const std::int64_t coeff = (*lambda)[*report.repeated_index];
    const Integer n = binomial(report.multiplicity_k + coeff - 1, coeff);
    return n.convert_to<std::int64_t>();
}

FactoredRationalSeries poincare_factored(const ValuationMatrix& m,
                                         const DegeneracyReport& report) {
    std::vector<FactoredRationalSeries::Factor> factors;
    for (std::size_t idx = 0; idx < report.distinct_columns.size(); ++idx) {
        if (report.repeated_index && idx == *report.repeated_index) continue;
        factors.push_back({report.distinct_columns[idx], 1});
    }
    if (report.repeated_index)
        factors.push_back({*report.repeated_column, report.multiplicity_k});
    return FactoredRationalSeries(std::move(factors));
}

SemigroupSpec to_semigroup_spec(const Constellation& c) {
    const ValuationMatrix m = valuation_matrix(c);
    const std::size_t d = static_cast<std::size_t>(c.dimension);
    std::vector<MultiExponent> generators;
    for (std::size_t i = 0; i < d; ++i) generators.push_back(MultiExponent::unit(d, i));
    std::vector<MultiExponent> valuations;
    for (std::size_t j = 0; j < m.rows(); ++j) valuations.push_back(m.row(j));
    return make_semigroup_spec(c.dimension, std::move(generators), std::move(valuations));
}

ValueVector monomial_values(const ValuationMatrix& m, const MultiExponent& n) {
    if (n.size() != m.cols()) throw input_error("exponent rank does not match the matrix");
    if (!n.all_nonnegative())
        throw input_error("monomial exponent must be nonnegative: " + n.to_string());
    std::vector<std::int64_t> out(m.rows(), 0);
    for (std::size_t j = 0; j < m.rows(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) out[j] += m.entries[j][i] * n[i];
    return ValueVector(std::move(out));
}

std::vector<std::size_t> ChartContext::defined_coordinates() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < K.size(); ++i)
        if (K[i]) out.push_back(i);
    return out;
}

ChartContext chart_context(const Constellation& c, std::size_t path_node,
                           std::int64_t final_weight) {
    if (path_node >= c.point_count())
        throw input_error("chart path node " + std::to_string(path_node) + " out of range");
    if (final_weight < 1 || final_weight > c.dimension)
        throw input_error("chart final weight " + std::to_string(final_weight) +
                          " outside 1.." + std::to_string(c.dimension));
    ChartContext ctx;
    ctx.dimension = c.dimension;
    std::size_t cur = path_node;
    ctx.chain.push_back(cur);
    while (c.points[cur].parent) {
        cur = static_cast<std::size_t>(*c.points[cur].parent);
        ctx.chain.push_back(cur);
    }
    std::reverse(ctx.chain.begin(), ctx.chain.end());
    for (std::size_t k = 0; k + 1 < ctx.chain.size(); ++k)
        ctx.weights.push_back(*c.points[ctx.chain[k + 1]].weight);
    ctx.weights.push_back(final_weight);

    ctx.K.assign(static_cast<std::size_t>(c.dimension), std::nullopt);
    for (std::size_t k = 0; k < ctx.chain.size(); ++k)
        ctx.K[static_cast<std::size_t>(ctx.weights[k] - 1)] = ctx.chain[k];
    return ctx;
}

namespace {

std::int64_t pairing(const std::vector<std::int64_t>& row, const MultiExponent& n) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < n.size(); ++i) acc += row[i] * n[i];
    return acc;
}

} // namespace

MultiExponent strict_transform_exponents(const ChartContext& ctx, const ValuationMatrix& m,
                                         const MultiExponent& n) {
    const std::size_t d = static_cast<std::size_t>(ctx.dimension);
    if (n.size() != d) throw input_error("exponent rank does not match the chart");
    if (!n.all_nonnegative())
        throw input_error("monomial exponent must be nonnegative: " + n.to_string());
    std::vector<std::int64_t> out(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (ctx.K[i]) {
            const std::int64_t f = pairing(m.entries[*ctx.K[i]], n);
            const std::int64_t h = f; // the monomial's own exceptional multiplicity
            out[i] = f - h;
        } else {
            out[i] = n[i];
        }
    }
    return MultiExponent(std::move(out));
}

std::vector<std::int64_t> chart_values(const ChartContext& ctx, const ValuationMatrix& m,
                                       const MultiExponent& n) {
    std::vector<std::int64_t> out;
    for (std::size_t i : ctx.defined_coordinates())
        out.push_back(pairing(m.entries[*ctx.K[i]], n));
    return out;
}

MultiExponent recover_monomial(const ChartContext& ctx, const ValuationMatrix& m,
                               const MultiExponent& strict,
                               const std::vector<std::int64_t>& h) {
    const std::size_t d = static_cast<std::size_t>(ctx.dimension);
    if (strict.size() != d) throw input_error("strict-transform exponent has wrong rank");
    const std::vector<std::size_t> defined = ctx.defined_coordinates();
    if (h.size() != defined.size())
        throw input_error("expected " + std::to_string(defined.size()) +
                          " exceptional multiplicities, got " + std::to_string(h.size()));

    IntMatrix system(d, std::vector<std::int64_t>(d, 0));
    std::vector<std::int64_t> rhs(d, 0);
    std::size_t next_defined = 0;
    for (std::size_t i = 0; i < d; ++i) {
        if (ctx.K[i]) {
            system[i] = m.entries[*ctx.K[i]];
            rhs[i] = strict[i] + h[next_defined++];
        } else {
            system[i][i] = 1;
            rhs[i] = strict[i];
        }
    }
    std::optional<std::vector<Rational>> solution;
    try {
        solution = solve_full_column_rank(system, rhs);
    } catch (const structural_violation&) {
        throw structural_violation("chart recovery system is singular");
    }
    if (!solution) throw input_error("strict-transform data is inconsistent");
    const auto n = as_nonnegative_integers(*solution);
    if (!n)
        throw input_error("strict-transform data is not realizable by a monomial "
                          "(non-integral or negative solution)");
    return MultiExponent(*n);
}

} // namespace tps
