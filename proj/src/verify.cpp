#include "tps/verify.hpp"

#include "tps/errors.hpp"
#include "tps/fibers.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

namespace tps {

namespace {

constexpr std::uint64_t kMixConstant = 0x9e3779b97f4a7c15ull;

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t x = seed ^ (salt * kMixConstant + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    return x;
}

template <typename Describe>
void check(SuiteResult& suite, const Json& replay, bool ok, Describe&& describe) {
    ++suite.checks;
    if (ok) return;
    ++suite.failures;
    if (suite.notes.size() < 5) suite.notes.push_back(describe());
    if (suite.replay.is_null()) suite.replay = replay;
}

void record_exception(SuiteResult& suite, const Json& replay, const std::string& what) {
    check(suite, replay, false, [&] { return "exception: " + what; });
}

} // namespace

Constellation random_constellation(Rng& rng, std::int64_t max_dimension,
                                   std::int64_t max_points) {
    Constellation c;
    c.dimension = rng.range(2, max_dimension);
    const std::int64_t point_count = rng.range(1, max_points);
    c.points.push_back({});
    for (std::int64_t j = 1; j < point_count; ++j) {
        // all open (parent, weight) slots, in deterministic order
        std::vector<std::pair<std::int64_t, std::int64_t>> slots;
        for (std::int64_t p = 0; p < j; ++p) {
            std::vector<bool> used(static_cast<std::size_t>(c.dimension) + 1, false);
            for (std::int64_t q = 1; q < j; ++q)
                if (*c.points[static_cast<std::size_t>(q)].parent == p)
                    used[static_cast<std::size_t>(
                        *c.points[static_cast<std::size_t>(q)].weight)] = true;
            for (std::int64_t w = 1; w <= c.dimension; ++w)
                if (!used[static_cast<std::size_t>(w)]) slots.emplace_back(p, w);
        }
        const auto [parent, weight] =
            slots[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(slots.size()) - 1))];
        c.points.push_back({parent, weight});
    }
    return c;
}

SemigroupSpec random_semigroup(Rng& rng) {
    for (;;) {
        const std::int64_t d = rng.range(1, 3);
        const std::int64_t generator_count = rng.range(d, 5);
        const std::int64_t r = rng.range(1, 3);

        std::vector<MultiExponent> generators;
        for (int attempt = 0; attempt < 60 &&
                              static_cast<std::int64_t>(generators.size()) < generator_count;
             ++attempt) {
            std::vector<std::int64_t> g(static_cast<std::size_t>(d));
            for (auto& x : g) x = rng.range(0, 3);
            MultiExponent candidate(g);
            if (candidate == MultiExponent::zeros(static_cast<std::size_t>(d))) continue;
            if (std::find(generators.begin(), generators.end(), candidate) != generators.end())
                continue;
            generators.push_back(std::move(candidate));
        }
        if (static_cast<std::int64_t>(generators.size()) < generator_count) continue;

        std::vector<MultiExponent> valuations;
        for (std::int64_t j = 0; j < r; ++j) {
            bool found = false;
            for (int attempt = 0; attempt < 20 && !found; ++attempt) {
                std::vector<std::int64_t> nu(static_cast<std::size_t>(d));
                for (auto& x : nu) x = rng.range(-1, 3);
                MultiExponent candidate(nu);
                bool positive = true;
                for (const auto& g : generators) {
                    std::int64_t pairing = 0;
                    for (std::size_t i = 0; i < g.size(); ++i) pairing += g[i] * candidate[i];
                    if (pairing <= 0) positive = false;
                }
                if (positive) {
                    valuations.push_back(std::move(candidate));
                    found = true;
                }
            }
            if (!found) {
                // all-ones always pairs positively with a nonzero nonnegative generator
                std::vector<std::int64_t> nu(static_cast<std::size_t>(d));
                for (auto& x : nu) x = 1 + rng.range(0, 2);
                valuations.push_back(MultiExponent(nu));
            }
        }

        SemigroupSpec spec = make_semigroup_spec(d, std::move(generators), std::move(valuations));
        if (validate(spec).ok) return spec;
    }
}

namespace {

Json constellation_replay(const Constellation& c, const TruncationBox& box,
                          std::uint64_t subseed) {
    Json out;
    out["kind"] = "constellation";
    out["subseed"] = subseed;
    out["box"] = exponent_to_json(box.bounds());
    out["constellation"] = constellation_to_json(c);
    return out;
}

Json semigroup_replay(const SemigroupSpec& spec, const TruncationBox& box,
                      std::uint64_t subseed) {
    Json out;
    out["kind"] = "semigroup";
    out["subseed"] = subseed;
    out["box"] = exponent_to_json(box.bounds());
    out["semigroup"] = semigroup_to_json(spec);
    return out;
}

Json series_replay(std::uint64_t subseed) {
    Json out;
    out["kind"] = "series";
    out["subseed"] = subseed;
    return out;
}

TruncatedSeries random_series(Rng& rng, const TruncationBox& box) {
    TruncatedSeries s(box);
    const std::int64_t terms = rng.range(0, 6);
    for (std::int64_t t = 0; t < terms; ++t) {
        std::vector<std::int64_t> e(box.rank());
        for (std::size_t i = 0; i < box.rank(); ++i) e[i] = rng.range(0, box.bounds()[i]);
        s.add_term(MultiExponent(e), rng.range(-4, 4));
    }
    return s;
}

} // namespace

void verify_series_instance(std::uint64_t subseed, VerifyReport& report) {
    const Json replay = series_replay(subseed);
    Rng rng(subseed);
    try {
        std::vector<std::int64_t> bounds(static_cast<std::size_t>(rng.range(1, 3)));
        for (auto& b : bounds) b = rng.range(2, 5);
        const TruncationBox box{MultiExponent(bounds)};

        const TruncatedSeries a = random_series(rng, box);
        const TruncatedSeries b = random_series(rng, box);
        const TruncatedSeries c = random_series(rng, box);
        const TruncatedSeries zero(box);
        const TruncatedSeries unit = TruncatedSeries::one(box);

        SuiteResult& laws = report.series_laws;
        check(laws, replay, (a + b) + c == a + (b + c), [] { return std::string("(a+b)+c != a+(b+c)"); });
        check(laws, replay, a + b == b + a, [] { return std::string("a+b != b+a"); });
        check(laws, replay, a * b == b * a, [] { return std::string("a*b != b*a"); });
        check(laws, replay, (a * b) * c == a * (b * c), [] { return std::string("(a*b)*c != a*(b*c)"); });
        check(laws, replay, a * (b + c) == a * b + a * c, [] { return std::string("a*(b+c) != a*b+a*c"); });
        check(laws, replay, a + zero == a, [] { return std::string("a+0 != a"); });
        check(laws, replay, a * unit == a, [] { return std::string("a*1 != a"); });
        check(laws, replay, TruncatedSeries::from_text(a.to_text()) == a,
              [] { return std::string("text round-trip is not the identity"); });
        check(laws, replay, series_from_json(series_to_json(a)) == a,
              [] { return std::string("json round-trip is not the identity"); });

        // factored expansion: inverse property and nonnegativity
        const std::size_t rank = static_cast<std::size_t>(rng.range(1, 3));
        std::vector<FactoredRationalSeries::Factor> factors;
        const std::int64_t factor_count = rng.range(1, 3);
        for (int attempt = 0;
             attempt < 40 && static_cast<std::int64_t>(factors.size()) < factor_count;
             ++attempt) {
            std::vector<std::int64_t> e(rank);
            for (auto& x : e) x = rng.range(1, 3);
            MultiExponent exponent(e);
            const bool duplicate =
                std::any_of(factors.begin(), factors.end(),
                            [&](const auto& f) { return f.exponent == exponent; });
            if (!duplicate) factors.push_back({exponent, rng.range(1, 3)});
        }
        const FactoredRationalSeries f(std::move(factors));
        std::vector<std::int64_t> fbounds(rank);
        for (auto& x : fbounds) x = rng.range(4, 8);
        const TruncationBox fbox{MultiExponent(fbounds)};
        const TruncatedSeries expansion = expand_factored(f, fbox);

        SuiteResult& exp = report.series_expansion;
        check(exp, replay, expansion * denominator_polynomial(f, fbox) == TruncatedSeries::one(fbox),
              [] { return std::string("expansion times denominator is not 1"); });
        bool nonnegative = true;
        for (const auto& [e, coeff] : expansion.sorted_terms())
            if (coeff < 0) nonnegative = false;
        check(exp, replay, nonnegative, [] { return std::string("negative expansion coefficient"); });
        check(exp, replay, factored_from_json(factored_to_json(f)) == f,
              [] { return std::string("factored json round-trip is not the identity"); });
    } catch (const std::exception& e) {
        record_exception(report.series_laws, replay, e.what());
    }
}

namespace {

std::vector<ValueVector> sample_support(const TruncatedSeries& series, Rng& rng,
                                        std::size_t count) {
    const auto terms = series.sorted_terms();
    std::vector<ValueVector> out;
    if (terms.empty()) return out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(
            terms[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(terms.size()) - 1))]
                .first);
    return out;
}

} // namespace

void verify_constellation_instance(const Constellation& c, const TruncationBox& box,
                                   std::uint64_t subseed, std::int64_t chi_cap,
                                   VerifyReport& report) {
    const Json replay = constellation_replay(c, box, subseed);
    Rng rng(mix(subseed, 7));
    const std::size_t d = static_cast<std::size_t>(c.dimension);
    const std::size_t r = c.point_count();

    try {
        const ValuationMatrix m = valuation_matrix(c);
        const DegeneracyReport deg = degeneracy_report(m, c); // throws on structural defects
        const RegularityCertificate cert = regularity_check(m);

        check(report.cone_regularity, replay, cert.regular, [&] {
            std::ostringstream os;
            os << "monomial cone not regular; divisors:";
            for (const auto& x : cert.elementary_divisors) os << ' ' << x;
            return os.str();
        });
        check(report.cone_regularity, replay,
              deg.degenerate == (deg.distinct_weight_count <= c.dimension - 2),
              [] { return std::string("degeneracy criterion mismatch"); });

        // exponent maps are unimodular and valuation rows grow monotonically
        const std::vector<ExponentMap> maps = exponent_maps(c);
        for (const ExponentMap& map : maps) {
            const Integer det = determinant(map);
            check(report.matrix_invariants, replay, det == 1 || det == -1,
                  [&] { return "exponent map determinant " + det.str(); });
        }
        for (std::size_t j = 0; j < r; ++j) {
            bool positive = true;
            for (std::size_t i = 0; i < d; ++i) positive &= (m.entries[j][i] >= 1);
            check(report.matrix_invariants, replay, positive,
                  [&] { return "valuation row " + std::to_string(j) + " has an entry < 1"; });
            if (!c.points[j].parent) continue;
            const std::size_t parent = static_cast<std::size_t>(*c.points[j].parent);
            const std::size_t chart = static_cast<std::size_t>(*c.points[j].weight - 1);
            bool monotone = true;
            for (std::size_t i = 0; i < d; ++i) {
                const std::int64_t diff = m.entries[j][i] - m.entries[parent][i];
                if (diff < 0 || (i != chart && diff == 0)) monotone = false;
            }
            check(report.matrix_invariants, replay, monotone, [&] {
                return "row " + std::to_string(j) +
                       " does not dominate its parent row (strictly off the chart axis)";
            });
        }

        const FactoredRationalSeries factored = poincare_factored(m, deg);
        check(report.matrix_invariants, replay,
              factored.total_multiplicity() == c.dimension,
              [] { return std::string("factor multiplicities do not sum to d"); });

        // three-way N(v) agreement: closed form vs expansion vs enumeration
        const SemigroupSpec spec = to_semigroup_spec(c);
        const TruncatedSeries expansion = expand_factored(factored, box);
        const TruncatedSeries push = pushforward_Q(spec, box);
        check(report.oracle_N, replay, expansion == push, [&] {
            return "pushforward and expansion differ at " +
                   std::to_string(expansion.diff(push).size()) + " exponents";
        });

        const auto support = push.sorted_terms();
        for (const auto& [v, coeff] : support) {
            const std::int64_t closed = closed_form_N(m, deg, v);
            check(report.oracle_N, replay, Integer(closed) == coeff, [&] {
                return "closed form " + std::to_string(closed) + " != coefficient " +
                       coeff.str() + " at " + v.to_string();
            });
        }
        // exhaustive sweep where the lattice is small enough: every v in a
        // clipped box, support or not
        if (r <= 4) {
            std::vector<std::int64_t> clip(r);
            for (std::size_t j = 0; j < r; ++j) clip[j] = std::min<std::int64_t>(box.bounds()[j], 8);
            MultiExponent v = MultiExponent::zeros(r);
            for (;;) {
                const std::int64_t closed = closed_form_N(m, deg, v);
                check(report.oracle_N, replay, Integer(closed) == push.coefficient(v), [&] {
                    return "closed form " + std::to_string(closed) +
                           " != coefficient at swept " + v.to_string();
                });
                std::size_t axis = 0;
                while (axis < r) {
                    if (v[axis] < clip[axis]) {
                        ++v[axis];
                        break;
                    }
                    v[axis] = 0;
                    ++axis;
                }
                if (axis == r) break;
            }
        }
        // off-support samples must give zero
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<std::int64_t> v(r);
            for (std::size_t j = 0; j < r; ++j) v[j] = rng.range(0, box.bounds()[j]);
            const ValueVector probe(v);
            const std::int64_t closed = closed_form_N(m, deg, probe);
            check(report.oracle_N, replay, Integer(closed) == push.coefficient(probe), [&] {
                return "closed form " + std::to_string(closed) + " != coefficient " +
                       push.coefficient(probe).str() + " at sampled " + probe.to_string();
            });
        }
        for (const ValueVector& base : sample_support(push, rng, 20)) {
            std::vector<std::int64_t> v = base.entries();
            const std::size_t axis = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(r) - 1));
            v[axis] += rng.range(0, 1) ? 1 : -1;
            const ValueVector probe(v);
            if (!box.contains(probe)) continue;
            const std::int64_t closed = closed_form_N(m, deg, probe);
            check(report.oracle_N, replay, Integer(closed) == push.coefficient(probe), [&] {
                return "closed form vs coefficient mismatch at perturbed " + probe.to_string();
            });
        }
        // independent per-v enumeration on a sample
        for (const ValueVector& v : sample_support(push, rng, 8)) {
            const std::int64_t brute = count_N(spec, v);
            check(report.oracle_N, replay, Integer(brute) == push.coefficient(v), [&] {
                return "count_N " + std::to_string(brute) + " != coefficient at " + v.to_string();
            });
            check(report.oracle_N, replay, brute == closed_form_N(m, deg, v),
                  [&] { return "count_N != closed form at " + v.to_string(); });
        }
        // degenerate cone: drive the binomial branch with lambda >= 2
        if (deg.degenerate) {
            for (std::int64_t lambda = 2; lambda <= 3; ++lambda) {
                std::vector<std::int64_t> v(r, 0);
                for (std::size_t j = 0; j < r; ++j) v[j] = lambda * (*deg.repeated_column)[j];
                const ValueVector target(v);
                const std::int64_t closed = closed_form_N(m, deg, target);
                const std::int64_t brute = count_N(spec, target);
                const Integer expected = binomial(deg.multiplicity_k + lambda - 1, lambda);
                check(report.oracle_N, replay, closed == brute && Integer(closed) == expected,
                      [&] {
                          return "binomial case failed at lambda=" + std::to_string(lambda) +
                                 ": closed=" + std::to_string(closed) +
                                 " brute=" + std::to_string(brute);
                      });
                report.binomial_lambda2_exercised = true;
            }
        }

        // strict transform and recovery are mutually inverse
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t node = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(r) - 1));
            const std::int64_t weight = rng.range(1, c.dimension);
            std::vector<std::int64_t> n(d);
            for (auto& x : n) x = rng.range(0, 6);
            const MultiExponent monomial(n);
            const ChartContext ctx = chart_context(c, node, weight);
            const MultiExponent strict = strict_transform_exponents(ctx, m, monomial);
            const std::vector<std::int64_t> h = chart_values(ctx, m, monomial);
            const MultiExponent recovered = recover_monomial(ctx, m, strict, h);
            check(report.transform_roundtrip, replay, recovered == monomial, [&] {
                return "round trip " + monomial.to_string() + " -> " + strict.to_string() +
                       " -> " + recovered.to_string();
            });
        }

        // Euler characteristic of the projectivized fiber equals N(v)
        for (const ValueVector& v : sample_support(push, rng, 10)) {
            const ChiResult chi = chi_PF(spec, v, chi_cap); // throws on internal mismatch
            check(report.fiber_chi, replay, chi.chi == count_N(spec, v),
                  [&] { return "chi != N at " + v.to_string(); });
        }

        // a separating subset forces disjoint minima across the split
        for (const ValueVector& v : sample_support(push, rng, 6)) {
            const SupportSet support = monomial_support(spec, v);
            if (support.monomials.empty() || nu_of_support(support) != v) continue;
            const LambdaFamily family = lambda_sets(support);
            bool cover = true;
            std::vector<bool> seen(support.monomials.size(), false);
            for (const auto& set : family.sets) {
                if (set.empty()) cover = false;
                for (std::size_t i : set) seen[i] = true;
            }
            cover = cover && std::all_of(seen.begin(), seen.end(), [](bool x) { return x; });
            check(report.lambda_splitting, replay, cover,
                  [&] { return "lambda sets do not cover the support at " + v.to_string(); });
            for (std::int64_t a = 1; a <= static_cast<std::int64_t>(r); ++a)
                for (std::int64_t b = a + 1; b <= static_cast<std::int64_t>(r); ++b) {
                    const SplitResult split = splitting_subset_exists(family, a, b);
                    if (!split.exists) continue;
                    std::vector<bool> in_D(r + 1, false);
                    for (std::int64_t j : split.witness) in_D[static_cast<std::size_t>(j)] = true;
                    bool implied = true;
                    for (std::int64_t x = 1; x <= static_cast<std::int64_t>(r); ++x)
                        for (std::int64_t y = 1; y <= static_cast<std::int64_t>(r); ++y)
                            if (in_D[static_cast<std::size_t>(x)] && !in_D[static_cast<std::size_t>(y)])
                                implied &= no_common_minimum(support, x, y);
                    check(report.lambda_splitting, replay, implied, [&] {
                        return "split witness without the disjoint-minima predicate at " + v.to_string();
                    });
                }
        }
    } catch (const std::exception& e) {
        record_exception(report.cone_regularity, replay, e.what());
    }
}

void verify_semigroup_instance(const SemigroupSpec& spec, const TruncationBox& box,
                               std::uint64_t subseed, VerifyReport& report) {
    const Json replay = semigroup_replay(spec, box, subseed);
    Rng rng(mix(subseed, 11));
    const std::size_t r = spec.valuation_count();
    try {
        const TruncatedSeries push = pushforward_Q(spec, box);
        const TruncatedSeries definitional = poincare_by_definition(spec, box);
        check(report.pushforward_definitional, replay, push == definitional, [&] {
            return "pushforward and definitional series differ at " +
                   std::to_string(push.diff(definitional).size()) + " exponents";
        });
        check(report.pushforward_definitional, replay,
              push.coefficient(MultiExponent::zeros(r)) == 1,
              [] { return std::string("coefficient at 0 is not 1"); });
        bool nonnegative = true;
        for (const auto& [e, coeff] : push.sorted_terms()) nonnegative &= (coeff >= 0);
        check(report.pushforward_definitional, replay, nonnegative,
              [] { return std::string("negative coefficient in pushforward"); });
        check(report.pushforward_definitional, replay, count_N(spec, MultiExponent::zeros(r)) == 1,
              [] { return std::string("N(0) != 1"); });
        std::vector<std::int64_t> negative(r, 0);
        negative[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(r) - 1))] = -1;
        check(report.pushforward_definitional, replay, count_N(spec, ValueVector(negative)) == 0,
              [] { return std::string("N(v) != 0 for negative v"); });

        // enlarging the box never loses elements
        std::vector<std::int64_t> larger = box.bounds().entries();
        for (auto& x : larger) x += 2;
        const auto small_set = enumerate_elements(spec, box);
        const auto large_set = enumerate_elements(spec, TruncationBox(MultiExponent(larger)));
        const bool superset = std::includes(
            large_set.begin(), large_set.end(), small_set.begin(), small_set.end(),
            [](const SemigroupElement& a, const SemigroupElement& b) {
                return graded_lex_less(a.exponent, b.exponent);
            });
        check(report.pushforward_definitional, replay, superset,
              [] { return std::string("enumeration is not monotone in the box"); });

        if (r == 1) {
            for (std::int64_t v = 0; v <= box.bounds()[0]; ++v) {
                const ValueVector probe({v});
                check(report.single_valuation_dims, replay,
                      definitional.coefficient(probe) == dim_quotient(spec, probe),
                      [&] { return "P and L disagree at " + probe.to_string(); });
            }
        }
    } catch (const std::exception& e) {
        record_exception(report.pushforward_definitional, replay, e.what());
    }
}

TruncationBox random_constellation_box(Rng& rng, const Constellation& c) {
    // the first coordinate bounds the total degree of the enumerated
    // monomials, so larger d gets a smaller window to keep runs quick
    const std::int64_t hi = c.dimension <= 3 ? 25 : (c.dimension == 4 ? 16 : 12);
    std::vector<std::int64_t> bounds(c.point_count());
    for (auto& b : bounds) b = rng.range(6, hi);
    return TruncationBox(MultiExponent(bounds));
}

TruncationBox random_semigroup_box(Rng& rng, const SemigroupSpec& spec) {
    std::vector<std::int64_t> bounds(spec.valuation_count());
    for (auto& b : bounds) b = rng.range(3, 12);
    return TruncationBox(MultiExponent(bounds));
}

std::vector<std::reference_wrapper<const SuiteResult>> VerifyReport::suites() const {
    return {series_laws,      series_expansion,    cone_regularity,
            matrix_invariants, oracle_N,           transform_roundtrip,
            fiber_chi,         lambda_splitting,   pushforward_definitional,
            single_valuation_dims};
}

bool VerifyReport::ok() const {
    for (const SuiteResult& s : suites())
        if (s.failures > 0) return false;
    return binomial_lambda2_exercised;
}

std::int64_t VerifyReport::total_checks() const {
    std::int64_t total = 0;
    for (const SuiteResult& s : suites()) total += s.checks;
    return total;
}

std::int64_t VerifyReport::total_failures() const {
    std::int64_t total = 0;
    for (const SuiteResult& s : suites()) total += s.failures;
    return total;
}

VerifyReport run_verification(const VerifyOptions& options) {
    VerifyReport report;
    for (std::int64_t i = 0; i < options.series_count; ++i)
        verify_series_instance(mix(options.seed, 1000 + static_cast<std::uint64_t>(i)), report);
    for (std::int64_t i = 0; i < options.constellation_count; ++i) {
        const std::uint64_t subseed = mix(options.seed, 2000 + static_cast<std::uint64_t>(i));
        Rng gen(subseed);
        const Constellation c = random_constellation(gen);
        const TruncationBox box = random_constellation_box(gen, c);
        verify_constellation_instance(c, box, subseed, options.chi_cap, report);
    }
    for (std::int64_t i = 0; i < options.semigroup_count; ++i) {
        const std::uint64_t subseed = mix(options.seed, 3000 + static_cast<std::uint64_t>(i));
        Rng gen(subseed);
        const SemigroupSpec spec = random_semigroup(gen);
        const TruncationBox box = random_semigroup_box(gen, spec);
        verify_semigroup_instance(spec, box, subseed, report);
    }
    return report;
}

VerifyReport run_replay(const nlohmann::json& instance, const VerifyOptions& options) {
    VerifyReport report;
    report.binomial_lambda2_exercised = true; // not meaningful for a single instance
    const std::string kind = instance.at("kind").get<std::string>();
    const std::uint64_t subseed = instance.at("subseed").get<std::uint64_t>();
    if (kind == "series") {
        verify_series_instance(subseed, report);
    } else if (kind == "constellation") {
        const Constellation c =
            require_constellation(instance.at("constellation").dump());
        const TruncationBox box{exponent_from_json(instance.at("box"))};
        verify_constellation_instance(c, box, subseed, options.chi_cap, report);
    } else if (kind == "semigroup") {
        const SemigroupSpec spec = semigroup_from_json(instance.at("semigroup"));
        const TruncationBox box{exponent_from_json(instance.at("box"))};
        verify_semigroup_instance(spec, box, subseed, report);
    } else {
        throw input_error("unknown replay kind: " + kind);
    }
    return report;
}

} // namespace tps
