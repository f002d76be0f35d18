#include "tps/semigroup.hpp"

#include "tps/errors.hpp"
#include "tps/exact_linalg.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace tps {

ValueVector SemigroupSpec::value_profile(const MultiExponent& s) const {
    std::vector<std::int64_t> out(valuations.size(), 0);
    for (std::size_t j = 0; j < valuations.size(); ++j) {
        const MultiExponent& nu = valuations[j];
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < s.size(); ++i) acc += s[i] * nu[i];
        out[j] = acc;
    }
    return ValueVector(std::move(out));
}

SemigroupSpec make_semigroup_spec(std::int64_t dimension, std::vector<MultiExponent> generators,
                                  std::vector<MultiExponent> valuations) {
    SemigroupSpec spec;
    spec.dimension = dimension;
    for (auto& g : generators) {
        if (std::find(spec.generators.begin(), spec.generators.end(), g) ==
            spec.generators.end())
            spec.generators.push_back(std::move(g));
    }
    spec.valuations = std::move(valuations);
    return spec;
}

ValidationReport validate(const SemigroupSpec& spec) {
    ValidationReport report;
    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.issues.push_back(msg);
    };

    if (spec.dimension < 1) fail("dimension must be >= 1");
    if (spec.generators.empty()) fail("no generators");
    if (spec.valuations.empty()) fail("no valuations (r >= 1 required)");
    const std::size_t d = static_cast<std::size_t>(std::max<std::int64_t>(spec.dimension, 0));
    for (std::size_t k = 0; k < spec.generators.size(); ++k) {
        if (spec.generators[k].size() != d) {
            fail("generator #" + std::to_string(k) + " has wrong length");
            return report;
        }
        if (spec.generators[k] == MultiExponent::zeros(d))
            fail("generator #" + std::to_string(k) + " is zero");
    }
    for (std::size_t j = 0; j < spec.valuations.size(); ++j)
        if (spec.valuations[j].size() != d) {
            fail("valuation #" + std::to_string(j) + " has wrong length");
            return report;
        }
    if (!report.ok) return report;

    // centre condition: <g, nu_j> > 0 pointwise; this is what makes every
    // N(v) finite and the closure enumeration terminate
    for (std::size_t k = 0; k < spec.generators.size(); ++k) {
        const ValueVector values = spec.value_profile(spec.generators[k]);
        for (std::size_t j = 0; j < values.size(); ++j)
            if (values[j] <= 0) {
                std::ostringstream os;
                os << "generator #" << k << " " << spec.generators[k].to_string()
                   << " has value " << values[j] << " under valuation #" << (j + 1)
                   << " " << spec.valuations[j].to_string() << " (must be > 0)";
                fail(os.str());
            }
    }

    IntMatrix gen_matrix;
    for (const auto& g : spec.generators) gen_matrix.push_back(g.entries());
    const std::vector<Integer> divisors = smith_normal_form(gen_matrix);
    const std::size_t ones =
        static_cast<std::size_t>(std::count(divisors.begin(), divisors.end(), Integer(1)));
    if (ones != d) {
        std::ostringstream os;
        os << "generators do not generate Z^" << d << " as a group (Smith divisors:";
        for (const auto& x : divisors) os << ' ' << x;
        os << ')';
        fail(os.str());
    }
    return report;
}

void require_valid(const SemigroupSpec& spec) {
    const ValidationReport report = validate(spec);
    if (report.ok) return;
    std::string msg = "invalid semigroup spec:";
    for (const auto& issue : report.issues) msg += "\n  " + issue;
    throw input_error(msg);
}

namespace {

/// Closure of {0} under generator addition, restricted to elements whose
/// value profile satisfies `keep`. Correct whenever `keep` is downward
/// closed along generator subtraction, which holds for every predicate used
/// here because values only grow.
std::vector<SemigroupElement> enumerate_closure(
    const SemigroupSpec& spec, const std::function<bool(const ValueVector&)>& keep) {
    std::vector<SemigroupElement> out;
    const MultiExponent origin = MultiExponent::zeros(static_cast<std::size_t>(spec.dimension));
    if (!keep(spec.value_profile(origin))) return out;

    std::vector<ValueVector> generator_values;
    generator_values.reserve(spec.generators.size());
    for (const auto& g : spec.generators) generator_values.push_back(spec.value_profile(g));

    std::unordered_set<MultiExponent, MultiExponentHash> seen;
    std::deque<SemigroupElement> frontier;
    frontier.push_back({origin, spec.value_profile(origin)});
    seen.insert(origin);
    while (!frontier.empty()) {
        SemigroupElement cur = std::move(frontier.front());
        frontier.pop_front();
        for (std::size_t k = 0; k < spec.generators.size(); ++k) {
            MultiExponent next = cur.exponent + spec.generators[k];
            if (seen.count(next)) continue;
            ValueVector values = cur.values + generator_values[k];
            if (!keep(values)) continue;
            seen.insert(next);
            frontier.push_back({std::move(next), std::move(values)});
        }
        out.push_back(std::move(cur));
    }
    std::sort(out.begin(), out.end(), [](const SemigroupElement& a, const SemigroupElement& b) {
        return graded_lex_less(a.exponent, b.exponent);
    });
    return out;
}

} // namespace

std::vector<SemigroupElement> enumerate_elements(const SemigroupSpec& spec,
                                                 const TruncationBox& box) {
    require_valid(spec);
    if (box.rank() != spec.valuation_count())
        throw input_error("box rank must equal the number of valuations");
    return enumerate_closure(spec,
                             [&](const ValueVector& v) { return v.leq(box.bounds()); });
}

std::vector<SemigroupElement> enumerate_elements_with_some_coordinate_below(
    const SemigroupSpec& spec, const ValueVector& bound) {
    require_valid(spec);
    if (bound.size() != spec.valuation_count())
        throw input_error("bound rank must equal the number of valuations");
    return enumerate_closure(spec, [&](const ValueVector& values) {
        for (std::size_t j = 0; j < values.size(); ++j)
            if (values[j] <= bound[j]) return true;
        return false;
    });
}

std::int64_t count_N(const SemigroupSpec& spec, const ValueVector& v) {
    require_valid(spec);
    if (v.size() != spec.valuation_count())
        throw input_error("value vector rank must equal the number of valuations");
    if (!v.all_nonnegative()) return 0;
    const auto elements =
        enumerate_closure(spec, [&](const ValueVector& w) { return w.leq(v); });
    return std::count_if(elements.begin(), elements.end(),
                         [&](const SemigroupElement& e) { return e.values == v; });
}

TruncatedSeries pushforward_Q(const SemigroupSpec& spec, const TruncationBox& box) {
    TruncatedSeries series(box);
    for (const SemigroupElement& e : enumerate_elements(spec, box))
        series.add_term(e.values, 1);
    return series;
}

std::int64_t dim_quotient(const SemigroupSpec& spec, const ValueVector& w) {
    require_valid(spec);
    if (w.size() != spec.valuation_count())
        throw input_error("value vector rank must equal the number of valuations");
    const std::size_t r = w.size();
    // witness coordinate must have w_j >= 0; if none exists the quotient
    // vanishes because I(w) = I(w+1) after stabilization
    bool has_witness_axis = false;
    for (std::size_t j = 0; j < r; ++j) has_witness_axis |= (w[j] >= 0);
    if (!has_witness_axis) return 0;

    const auto candidates = enumerate_closure(spec, [&](const ValueVector& values) {
        for (std::size_t j = 0; j < r; ++j)
            if (w[j] >= 0 && values[j] <= w[j]) return true;
        return false;
    });
    std::int64_t count = 0;
    for (const SemigroupElement& e : candidates) {
        bool above = true, touches = false;
        for (std::size_t j = 0; j < r; ++j) {
            if (e.values[j] < w[j]) above = false;
            if (w[j] >= 0 && e.values[j] == w[j]) touches = true;
        }
        if (above && touches) ++count;
    }
    return count;
}

namespace {

/// dim C[S]/I(w) = #{s : <s,nu_j> <= w_j - 1 for some j}, evaluated against a
/// pre-enumerated candidate list (all s that can matter for any w <= limit).
std::int64_t codimension(const std::vector<ValueVector>& candidate_values,
                         const MultiExponent& w) {
    std::int64_t count = 0;
    for (const ValueVector& values : candidate_values) {
        for (std::size_t j = 0; j < w.size(); ++j)
            if (values[j] < w[j]) {
                ++count;
                break;
            }
    }
    return count;
}

} // namespace

TruncatedSeries poincare_by_definition(const SemigroupSpec& spec, const TruncationBox& box) {
    require_valid(spec);
    const std::size_t r = spec.valuation_count();
    if (box.rank() != r) throw input_error("box rank must equal the number of valuations");
    if (r > 16)
        throw resource_limit("definitional Poincare series limited to r <= 16 valuations (got " +
                             std::to_string(r) + ")");

    // every queried w is <= box+1 componentwise
    const auto candidates = enumerate_closure(spec, [&](const ValueVector& values) {
        for (std::size_t j = 0; j < r; ++j)
            if (values[j] <= box.bounds()[j]) return true;
        return false;
    });
    std::vector<ValueVector> candidate_values;
    candidate_values.reserve(candidates.size());
    for (const auto& e : candidates) candidate_values.push_back(e.values);

    std::unordered_map<MultiExponent, std::int64_t, MultiExponentHash> codim_cache;
    auto cached_codim = [&](const MultiExponent& w) {
        auto it = codim_cache.find(w);
        if (it != codim_cache.end()) return it->second;
        const std::int64_t value = codimension(candidate_values, w);
        codim_cache.emplace(w, value);
        return value;
    };

    TruncatedSeries series(box);
    const int sign_prefix = (r % 2 == 0) ? -1 : 1; // (-1)^{r+1}
    MultiExponent v = MultiExponent::zeros(r);
    for (;;) {
        std::int64_t coeff = 0;
        for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
            MultiExponent w = v;
            for (std::size_t j = 0; j < r; ++j) w[j] += (mask >> j & 1u) ? 0 : 1;
            const int sign = (__builtin_popcount(mask) % 2 == 0) ? 1 : -1;
            coeff += sign * cached_codim(w);
        }
        series.add_term(v, Integer(sign_prefix * coeff));

        // odometer over the box
        std::size_t axis = 0;
        while (axis < r) {
            if (v[axis] < box.bounds()[axis]) {
                ++v[axis];
                break;
            }
            v[axis] = 0;
            ++axis;
        }
        if (axis == r) break;
    }
    return series;
}

} // namespace tps
