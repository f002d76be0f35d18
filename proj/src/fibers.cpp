#include "tps/fibers.hpp"

#include "tps/errors.hpp"

#include <algorithm>
#include <numeric>

namespace tps {

namespace {

bool meets_target(const ValueVector& values, const ValueVector& v, std::size_t* witness) {
    bool above = true, touches = false;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (values[j] < v[j]) above = false;
        if (values[j] == v[j]) {
            touches = true;
            if (witness) *witness = j;
        }
    }
    return above && touches;
}

void sort_support(std::vector<SemigroupElement>& monomials) {
    std::sort(monomials.begin(), monomials.end(),
              [](const SemigroupElement& a, const SemigroupElement& b) {
                  return graded_lex_less(a.exponent, b.exponent);
              });
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
}

} // namespace

SupportSet monomial_support(const SemigroupSpec& spec, const ValueVector& v) {
    require_valid(spec);
    if (v.size() != spec.valuation_count())
        throw input_error("value vector rank must equal the number of valuations");
    if (!v.all_nonnegative())
        throw input_error("monomial support requires v >= 0, got " + v.to_string());

    SupportSet support;
    support.target_v = v;
    // every member has some value coordinate pinned at v_j, so the closure
    // below the componentwise "some coordinate <= v_j" frontier is enough
    for (const SemigroupElement& e :
         enumerate_elements_with_some_coordinate_below(spec, v))
        if (meets_target(e.values, v, nullptr)) support.monomials.push_back(e);
    sort_support(support.monomials);
    return support;
}

SupportSet make_support(const SemigroupSpec& spec, const ValueVector& v,
                        const std::vector<MultiExponent>& monomials) {
    require_valid(spec);
    SupportSet support;
    support.target_v = v;
    for (const MultiExponent& n : monomials) {
        SemigroupElement e{n, spec.value_profile(n)};
        if (!meets_target(e.values, v, nullptr))
            throw input_error("monomial " + n.to_string() + " with values " +
                              e.values.to_string() + " is not admissible for v = " +
                              v.to_string());
        support.monomials.push_back(std::move(e));
    }
    sort_support(support.monomials);
    return support;
}

ValueVector nu_of_support(const SupportSet& support) {
    if (support.monomials.empty()) throw input_error("nu of an empty support");
    std::vector<std::int64_t> w = support.monomials.front().values.entries();
    for (const SemigroupElement& e : support.monomials)
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = std::min(w[j], e.values[j]);
    return ValueVector(std::move(w));
}

LambdaFamily lambda_sets(const SupportSet& support) {
    if (support.monomials.empty()) throw input_error("lambda sets of an empty support");
    if (nu_of_support(support) != support.target_v)
        throw input_error("nu(L) = " + nu_of_support(support).to_string() +
                          " differs from v = " + support.target_v.to_string() +
                          "; L is not the support of an element of the fiber");
    LambdaFamily family;
    family.target_v = support.target_v;
    family.monomials = support.monomials;
    family.sets.assign(support.target_v.size(), {});
    for (std::size_t i = 0; i < support.monomials.size(); ++i)
        for (std::size_t j = 0; j < support.target_v.size(); ++j)
            if (support.monomials[i].values[j] == support.target_v[j])
                family.sets[j].push_back(i);
    return family;
}

SplitResult splitting_subset_exists(const LambdaFamily& family, std::int64_t a, std::int64_t b) {
    const std::int64_t r = static_cast<std::int64_t>(family.sets.size());
    if (a < 1 || a > r || b < 1 || b > r) throw input_error("valuation index outside 1..r");
    if (a == b) throw input_error("splitting query requires two distinct valuations");

    // union-find over the valuations; two indices join when their
    // Lambda-sets share a monomial
    std::vector<std::size_t> root(static_cast<std::size_t>(r));
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    std::vector<std::vector<std::size_t>> member_sets(family.monomials.size());
    for (std::size_t j = 0; j < family.sets.size(); ++j)
        for (std::size_t i : family.sets[j]) member_sets[i].push_back(j);
    for (const auto& js : member_sets)
        for (std::size_t k = 1; k < js.size(); ++k) root[find(js[0])] = find(js[k]);

    SplitResult result;
    if (find(static_cast<std::size_t>(a - 1)) == find(static_cast<std::size_t>(b - 1)))
        return result;
    result.exists = true;
    for (std::size_t j = 0; j < static_cast<std::size_t>(r); ++j)
        if (find(j) == find(static_cast<std::size_t>(a - 1)))
            result.witness.push_back(static_cast<std::int64_t>(j + 1));

    // the returned component must actually satisfy condition (2)
    std::vector<bool> in_D(static_cast<std::size_t>(r), false);
    for (std::int64_t j : result.witness) in_D[static_cast<std::size_t>(j - 1)] = true;
    for (std::size_t i = 0; i < family.monomials.size(); ++i) {
        bool inside = false, outside = false;
        for (std::size_t j : member_sets[i]) (in_D[j] ? inside : outside) = true;
        if (inside && outside)
            throw structural_violation("splitting witness crosses the partition");
    }
    return result;
}

bool no_common_minimum(const SupportSet& support, std::int64_t a, std::int64_t b) {
    const std::int64_t r = static_cast<std::int64_t>(support.target_v.size());
    if (a < 1 || a > r || b < 1 || b > r) throw input_error("valuation index outside 1..r");
    if (a == b) throw input_error("common-minimum query requires two distinct valuations");
    for (const SemigroupElement& e : support.monomials)
        if (e.values[static_cast<std::size_t>(a - 1)] ==
                support.target_v[static_cast<std::size_t>(a - 1)] &&
            e.values[static_cast<std::size_t>(b - 1)] ==
                support.target_v[static_cast<std::size_t>(b - 1)])
            return false;
    return true;
}

ChiResult chi_PF(const SemigroupSpec& spec, const ValueVector& v, std::int64_t cap) {
    const SupportSet support = monomial_support(spec, v);
    const std::int64_t brute = count_N(spec, v);
    if (static_cast<std::int64_t>(support.monomials.size()) > cap)
        return {brute, false};

    const std::size_t k = support.monomials.size();
    const std::size_t r = v.size();
    // last member index attaining each coordinate, for pruning
    std::vector<std::int64_t> last_attainer(r, -1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (support.monomials[i].values[j] == v[j])
                last_attainer[j] = static_cast<std::int64_t>(i);

    std::int64_t chi = 0;
    std::vector<std::size_t> attain_count(r, 0);
    // depth-first walk over subsets L of the support; a subset is a valid
    // stratum when nu(L) = v, i.e. every coordinate is attained
    auto walk = [&](auto&& self, std::size_t idx, std::size_t chosen) -> void {
        for (std::size_t j = 0; j < r; ++j)
            if (attain_count[j] == 0 && last_attainer[j] < static_cast<std::int64_t>(idx))
                return; // coordinate j can no longer be attained
        if (idx == k) {
            if (chosen == 1) chi += 1; // chi of a torus stratum is 0
            return;
        }
        self(self, idx + 1, chosen); // exclude member idx
        for (std::size_t j = 0; j < r; ++j)
            if (support.monomials[idx].values[j] == v[j]) ++attain_count[j];
        self(self, idx + 1, chosen + 1); // include member idx
        for (std::size_t j = 0; j < r; ++j)
            if (support.monomials[idx].values[j] == v[j]) --attain_count[j];
    };
    walk(walk, 0, 0);

    if (chi != brute)
        throw structural_violation("stratified Euler characteristic " + std::to_string(chi) +
                                   " differs from N(v) = " + std::to_string(brute) + " at v = " +
                                   v.to_string());
    return {chi, true};
}

} // namespace tps
