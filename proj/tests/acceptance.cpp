// Acceptance suite: drives every contract the project promises, one
// criterion per line, against the worked blow-up example and seeded random
// populations. Exits nonzero when anything fails.

#include "tps/cli.hpp"
#include "tps/constellation.hpp"
#include "tps/errors.hpp"
#include "tps/fibers.hpp"
#include "tps/json_io.hpp"
#include "tps/semigroup.hpp"
#include "tps/series.hpp"
#include "tps/verify.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

using namespace tps;

namespace {

int failures = 0;

void record(int id, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string data_path(const std::string& name) {
    return std::string(TPS_TEST_DATA_DIR) + "/" + name;
}

const IntMatrix kExampleMatrix{
    {1, 1, 1, 1}, {1, 2, 2, 2}, {2, 1, 2, 2}, {1, 3, 3, 3}, {2, 3, 4, 4}};

void criterion_1_golden_example(const Constellation& c) {
    const auto start = std::chrono::steady_clock::now();
    const ValuationMatrix m = valuation_matrix(c);
    const DegeneracyReport report = degeneracy_report(m, c);
    const FactoredRationalSeries factored = poincare_factored(m, report);
    const double elapsed = seconds_since(start);

    const bool matrix_ok = m.entries == kExampleMatrix;
    const std::vector<FactoredRationalSeries::Factor> expected{
        {MultiExponent{1, 1, 2, 1, 2}, 1},
        {MultiExponent{1, 2, 1, 3, 3}, 1},
        {MultiExponent{1, 2, 2, 3, 4}, 2}};
    const bool factored_ok = factored.factors() == expected;
    std::ostringstream detail;
    detail << "matrix rows and factored series match the worked example exactly ("
           << static_cast<int>(elapsed * 1000) << " ms)";
    record(1, matrix_ok && factored_ok && elapsed < 1.0, detail.str());
}

void criterion_2_monomial_values(const Constellation& c) {
    const ValuationMatrix m = valuation_matrix(c);
    const bool ok =
        monomial_values(m, MultiExponent{0, 2, 4, 0}) == ValueVector{6, 12, 10, 18, 22} &&
        monomial_values(m, MultiExponent{3, 4, 0, 0}) == ValueVector{7, 11, 10, 15, 18} &&
        monomial_values(m, MultiExponent{14, 0, 0, 0}) == ValueVector{14, 14, 28, 14, 28};
    record(2, ok, "values of y^2 z^4, x^3 y^4 and x^14 reproduce exactly");
}

void criterion_3_lambda_sets(const Constellation& c) {
    const SemigroupSpec spec = to_semigroup_spec(c);
    const ValueVector v{6, 11, 10, 14, 18};
    const MultiExponent yz{0, 2, 4, 0}, xy{3, 4, 0, 0}, x14{14, 0, 0, 0};
    bool ok = true;
    try {
        const SupportSet g = make_support(spec, v, {yz, xy, x14});
        const LambdaFamily family = lambda_sets(g);
        auto members = [&](std::size_t j) {
            std::vector<MultiExponent> out;
            for (std::size_t i : family.sets[j - 1]) out.push_back(family.monomials[i].exponent);
            return out;
        };
        ok = ok && members(1) == std::vector<MultiExponent>{yz};
        ok = ok && members(2) == std::vector<MultiExponent>{xy};
        ok = ok && members(3) == std::vector<MultiExponent>{yz, xy};
        ok = ok && members(4) == std::vector<MultiExponent>{x14};
        ok = ok && members(5) == std::vector<MultiExponent>{xy};
        const SplitResult split = splitting_subset_exists(family, 4, 1);
        ok = ok && split.exists && split.witness == std::vector<std::int64_t>{4};
    } catch (const std::exception&) {
        ok = false;
    }
    record(3, ok, "lambda sets match the five intersection equations; D={4} splits 4 from 1");
}

VerifyReport run_constellation_population(std::int64_t count, std::uint64_t seed) {
    VerifyReport report;
    Rng master(seed);
    for (std::int64_t i = 0; i < count; ++i) {
        const std::uint64_t subseed = master.next();
        Rng gen(subseed);
        const Constellation c = random_constellation(gen);
        const TruncationBox box = random_constellation_box(gen, c);
        verify_constellation_instance(c, box, subseed, 20, report);
    }
    return report;
}

void criterion_4_series_identity(std::int64_t count) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    Rng master(20250811);
    for (std::int64_t i = 0; i < count; ++i) {
        const std::uint64_t subseed = master.next();
        Rng gen(subseed);
        const SemigroupSpec spec = random_semigroup(gen);
        const TruncationBox box = random_semigroup_box(gen, spec);
        verify_semigroup_instance(spec, box, subseed, report);
    }
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << "pushforward equals the definitional series on " << count
           << " random semigroups, box entries <= 12 (" << static_cast<int>(elapsed * 1000)
           << " ms)";
    record(4, report.pushforward_definitional.failures == 0 && report.pushforward_definitional.checks >= count &&
                  elapsed < 60.0,
           detail.str());
}

void criterion_5_cone_reports(const VerifyReport& population, std::int64_t count) {
    std::ostringstream detail;
    detail << "regularity and the weight criterion hold on " << count
           << " random constellations (" << population.cone_regularity.checks << " checks)";
    record(5, population.cone_regularity.failures == 0 &&
                  population.cone_regularity.checks >= 2 * count,
           detail.str());
}

void criterion_6_closed_form(const VerifyReport& population) {
    std::ostringstream detail;
    detail << "closed-form N == enumeration == expansion coefficient ("
           << population.oracle_N.checks << " checks); binomial with lambda >= 2 "
           << (population.binomial_lambda2_exercised ? "exercised" : "NOT exercised");
    record(6, population.oracle_N.failures == 0 && population.binomial_lambda2_exercised,
           detail.str());
}

void criterion_7_chi(const Constellation& c) {
    const SemigroupSpec spec = to_semigroup_spec(c);
    const TruncationBox box{2, 4, 4, 6, 8};
    std::int64_t swept = 0, stratified = 0, wrong = 0;
    bool threw = false;
    try {
        MultiExponent v = MultiExponent::zeros(5);
        for (;;) {
            const ChiResult chi = chi_PF(spec, v, 20);
            ++swept;
            if (chi.stratified) ++stratified;
            if (chi.chi != count_N(spec, v)) ++wrong;
            std::size_t axis = 0;
            while (axis < 5) {
                if (v[axis] < box.bounds()[axis]) {
                    ++v[axis];
                    break;
                }
                v[axis] = 0;
                ++axis;
            }
            if (axis == 5) break;
        }
    } catch (const std::exception&) {
        threw = true;
    }
    std::ostringstream detail;
    detail << "chi(PF_v) == N(v) for all " << swept << " v in the box (" << stratified
           << " stratified, cap 20)";
    record(7, !threw && wrong == 0 && stratified > 0, detail.str());
}

void criterion_8_roundtrip(const VerifyReport& population, const Constellation& c) {
    bool chart_cases_ok = true;
    try {
        const ValuationMatrix m = valuation_matrix(c);
        const ChartContext ctx = chart_context(c, 1, 2);
        chart_cases_ok =
            strict_transform_exponents(ctx, m, MultiExponent{3, 4, 0, 0}) ==
                MultiExponent{0, 0, 0, 0} &&
            strict_transform_exponents(ctx, m, MultiExponent{0, 2, 4, 0}) ==
                MultiExponent{0, 0, 4, 0} &&
            recover_monomial(ctx, m, MultiExponent{0, 0, 4, 0}, {6, 12}) ==
                MultiExponent{0, 2, 4, 0} &&
            recover_monomial(ctx, m, MultiExponent{0, 0, 0, 0}, {7, 11}) ==
                MultiExponent{3, 4, 0, 0};
    } catch (const std::exception&) {
        chart_cases_ok = false;
    }
    std::ostringstream detail;
    detail << "strict transform and recovery are mutually inverse ("
           << population.transform_roundtrip.checks << " random pairs; chart 1-2 cases exact)";
    record(8, chart_cases_ok && population.transform_roundtrip.failures == 0 &&
                  population.transform_roundtrip.checks >= 100 * 50,
           detail.str());
}

} // namespace

int main() {
    Constellation example;
    try {
        example = require_constellation(read_file(data_path("example_constellation.json")));
    } catch (const std::exception& e) {
        std::printf("FAIL criterion 1: cannot load the example constellation: %s\n", e.what());
        return 1;
    }

    criterion_1_golden_example(example);
    criterion_2_monomial_values(example);
    criterion_3_lambda_sets(example);
    criterion_4_series_identity(20);

    const std::int64_t population_size = 50;
    const VerifyReport population = run_constellation_population(population_size, 42);
    criterion_5_cone_reports(population, population_size);
    criterion_6_closed_form(population);
    criterion_7_chi(example);
    criterion_8_roundtrip(population, example);

    if (failures == 0)
        std::printf("all 8 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
