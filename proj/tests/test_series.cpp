#include "tps/series.hpp"

#include "tps/errors.hpp"
#include "tps/json_io.hpp"
#include "tps/verify.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace tps;

namespace {

TruncatedSeries make_series(const TruncationBox& box,
                            const std::vector<std::pair<std::vector<std::int64_t>, int>>& terms) {
    TruncatedSeries s(box);
    for (const auto& [e, c] : terms) s.add_term(MultiExponent(e), c);
    return s;
}

} // namespace

TEST_CASE("series addition cancels to canonical form") {
    const TruncationBox box{2};
    const TruncatedSeries a = make_series(box, {{{0}, 1}, {{1}, 1}}); // 1 + t
    const TruncatedSeries b = make_series(box, {{{0}, -1}});          // -1
    const TruncatedSeries sum = a + b;
    CHECK(sum == make_series(box, {{{1}, 1}}));
    CHECK(sum.term_count() == 1); // the cancelled constant is not stored
}

TEST_CASE("zero is the additive identity") {
    const TruncationBox box{3, 2};
    const TruncatedSeries a = make_series(box, {{{0, 0}, 2}, {{3, 1}, -5}});
    CHECK(a + TruncatedSeries(box) == a);
}

TEST_CASE("coefficientwise addition") {
    const TruncationBox box{3};
    TruncatedSeries a(box), b(box), expected(box);
    for (std::int64_t n = 0; n <= 3; ++n) {
        a.add_term(MultiExponent{n}, n + 1);
        b.add_term(MultiExponent{n}, 1);
        expected.add_term(MultiExponent{n}, n + 2);
    }
    CHECK(a + b == expected);
}

TEST_CASE("one is the multiplicative identity") {
    const TruncationBox box{2, 2};
    const TruncatedSeries a = make_series(box, {{{1, 0}, 3}, {{2, 2}, -1}, {{0, 0}, 7}});
    CHECK(a * TruncatedSeries::one(box) == a);
}

TEST_CASE("binomial square") {
    const TruncationBox box{2};
    const TruncatedSeries one_plus_t = make_series(box, {{{0}, 1}, {{1}, 1}});
    CHECK(one_plus_t * one_plus_t == make_series(box, {{{0}, 1}, {{1}, 2}, {{2}, 1}}));
}

TEST_CASE("telescoping product against the truncated geometric series") {
    const TruncationBox box{3};
    const TruncatedSeries geometric =
        make_series(box, {{{0}, 1}, {{1}, 1}, {{2}, 1}, {{3}, 1}});
    const TruncatedSeries one_minus_t = make_series(box, {{{0}, 1}, {{1}, -1}});
    CHECK(geometric * one_minus_t == TruncatedSeries::one(box));
}

TEST_CASE("box mismatch is rejected") {
    const TruncatedSeries a{TruncationBox{2}};
    const TruncatedSeries b{TruncationBox{3}};
    CHECK_THROWS_AS(a + b, input_error);
    CHECK_THROWS_AS(a * b, input_error);
}

TEST_CASE("coefficient lookup distinguishes zero from out-of-box") {
    const TruncationBox box{1};
    const TruncatedSeries a = make_series(box, {{{0}, 1}, {{1}, 3}});
    CHECK(a.coefficient(MultiExponent{1}) == 3);
    CHECK(a.coefficient(MultiExponent{0}) == 1);
    CHECK_THROWS_AS(a.coefficient(MultiExponent{2}), input_error);
}

TEST_CASE("expansion of two planar factors") {
    const FactoredRationalSeries f{{{{1, 1}, 1}, {{1, 2}, 1}}};
    const TruncationBox box{2, 3};
    const TruncatedSeries expansion = expand_factored(f, box);
    CHECK(expansion.coefficient(MultiExponent{2, 3}) == 1);
    // cross-check the whole window against the recursive oracle
    const oracles::FactorList factors{{{1, 1}, 1}, {{1, 2}, 1}};
    for (std::int64_t x = 0; x <= 2; ++x)
        for (std::int64_t y = 0; y <= 3; ++y)
            CHECK(expansion.coefficient(MultiExponent{x, y}) ==
                  oracles::factored_coefficient(factors, {x, y}));
}

TEST_CASE("expansion of a squared univariate factor") {
    const FactoredRationalSeries f{{{{1}, 2}}};
    const TruncatedSeries expansion = expand_factored(f, TruncationBox{3});
    CHECK(expansion ==
          make_series(TruncationBox{3}, {{{0}, 1}, {{1}, 2}, {{2}, 3}, {{3}, 4}}));
}

TEST_CASE("expansion of the blow-up example series") {
    const FactoredRationalSeries f{
        {{{1, 1, 2, 1, 2}, 1}, {{1, 2, 1, 3, 3}, 1}, {{1, 2, 2, 3, 4}, 2}}};
    const TruncationBox box{2, 4, 4, 6, 8};
    const TruncatedSeries expansion = expand_factored(f, box);
    CHECK(expansion.coefficient(MultiExponent{1, 2, 2, 3, 4}) == 2);
    const oracles::FactorList factors{
        {{1, 1, 2, 1, 2}, 1}, {{1, 2, 1, 3, 3}, 1}, {{1, 2, 2, 3, 4}, 2}};
    CHECK(oracles::factored_coefficient(factors, {1, 2, 2, 3, 4}) == 2);
    for (const auto& [e, c] : expansion.sorted_terms())
        CHECK(c == oracles::factored_coefficient(factors, e.entries()));
}

TEST_CASE("expansion coefficient at the continued-example value vector") {
    // (6,11,10,14,18) is attained by functions but by no monomial, so the
    // coefficient must be zero
    const FactoredRationalSeries f{
        {{{1, 1, 2, 1, 2}, 1}, {{1, 2, 1, 3, 3}, 1}, {{1, 2, 2, 3, 4}, 2}}};
    const std::vector<std::int64_t> v{6, 11, 10, 14, 18};
    const TruncatedSeries expansion = expand_factored(f, TruncationBox{MultiExponent(v)});
    const IntMatrix L{{1, 1, 1, 1}, {1, 2, 2, 2}, {2, 1, 2, 2}, {1, 3, 3, 3}, {2, 3, 4, 4}};
    CHECK(expansion.coefficient(MultiExponent(v)) ==
          oracles::lattice_solution_count(L, v));
    CHECK(expansion.coefficient(MultiExponent(v)) == 0);
}

TEST_CASE("invalid factor lists are rejected") {
    const std::vector<FactoredRationalSeries::Factor> zero_component{{MultiExponent{1, 0}, 1}};
    const std::vector<FactoredRationalSeries::Factor> zero_multiplicity{{MultiExponent{1, 1}, 0}};
    const std::vector<FactoredRationalSeries::Factor> repeated{{MultiExponent{1, 1}, 1},
                                                               {MultiExponent{1, 1}, 2}};
    CHECK_THROWS_AS((void)FactoredRationalSeries{zero_component}, input_error);
    CHECK_THROWS_AS((void)FactoredRationalSeries{zero_multiplicity}, input_error);
    CHECK_THROWS_AS((void)FactoredRationalSeries{repeated}, input_error);
}

TEST_CASE("expansion times denominator is one") {
    const FactoredRationalSeries f{{{{1, 2}, 2}, {{2, 1}, 1}}};
    const TruncationBox box{5, 5};
    CHECK(expand_factored(f, box) * denominator_polynomial(f, box) ==
          TruncatedSeries::one(box));
}

TEST_CASE("canonical text form and round trip") {
    const TruncationBox box{2, 2};
    const TruncatedSeries a =
        make_series(box, {{{2, 2}, 4}, {{0, 0}, 1}, {{1, 0}, -2}, {{0, 1}, 3}});
    // graded-lex: degree first, then lexicographic
    CHECK(a.to_text() == "box 2 2\n1 0 0\n3 0 1\n-2 1 0\n4 2 2\n");
    CHECK(TruncatedSeries::from_text(a.to_text()) == a);
    CHECK(series_from_json(series_to_json(a)) == a);
}

TEST_CASE("factored series text form") {
    const FactoredRationalSeries f{{{{1, 1}, 1}, {{2, 3}, 2}}};
    CHECK(f.to_text() == "1/((1-t^(1,1))(1-t^(2,3))^2)");
    CHECK(factored_from_json(factored_to_json(f)) == f);
}

TEST_CASE("ring laws on random series") {
    Rng rng(20240811);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::int64_t> bounds(static_cast<std::size_t>(rng.range(1, 3)));
        for (auto& b : bounds) b = rng.range(1, 4);
        const TruncationBox box{MultiExponent(bounds)};
        auto random_series = [&] {
            TruncatedSeries s(box);
            for (std::int64_t k = rng.range(0, 6); k > 0; --k) {
                std::vector<std::int64_t> e(bounds.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = rng.range(0, bounds[i]);
                s.add_term(MultiExponent(e), rng.range(-3, 3));
            }
            return s;
        };
        const TruncatedSeries a = random_series(), b = random_series(), c = random_series();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("binomial helper agrees with Pascal recursion") {
    for (std::int64_t n = 0; n <= 12; ++n)
        for (std::int64_t k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == oracles::pascal_binomial(n, k));
    CHECK(binomial(40, 20) == Integer("137846528820"));
}
