#ifndef TPS_FIBERS_HPP
#define TPS_FIBERS_HPP

#include "tps/multi_exponent.hpp"
#include "tps/semigroup.hpp"

#include <cstdint>
#include <vector>

namespace tps {

/// A set of monomials that can appear in the support of a function with
/// valuation vector target_v: every member m has value(m) >= target_v
/// componentwise with equality in at least one coordinate.
struct SupportSet {
    ValueVector target_v;
    std::vector<SemigroupElement> monomials; // graded-lex by exponent, no duplicates
};

/// The full monomial set for v: all monomials of I(v) that achieve some
/// minimum. Finite because each equality pins one value coordinate.
SupportSet monomial_support(const SemigroupSpec& spec, const ValueVector& v);

/// A chosen subset (the support of one particular function); members are
/// validated against the support-set invariant.
SupportSet make_support(const SemigroupSpec& spec, const ValueVector& v,
                        const std::vector<MultiExponent>& monomials);

/// Componentwise minimum of the member values.
ValueVector nu_of_support(const SupportSet& support);

/// Lambda_j = {m in L : nu_j(m) = v_j}, stored as ascending member indices.
/// Only defined when nu(L) = v; then every Lambda_j is nonempty and the sets
/// cover L.
struct LambdaFamily {
    ValueVector target_v;
    std::vector<SemigroupElement> monomials;       // copy of the support
    std::vector<std::vector<std::size_t>> sets;    // sets[j] for valuation j+1
};

LambdaFamily lambda_sets(const SupportSet& support);

/// Is there a subset D of the valuations with a in D, b not
/// in D, whose Lambda-union is disjoint from the complement's union? Decided
/// through connectivity of the overlap graph; the witness is the component
/// of a (1-based indices, ascending) when one exists.
struct SplitResult {
    bool exists = false;
    std::vector<std::int64_t> witness;
};

SplitResult splitting_subset_exists(const LambdaFamily& family, std::int64_t a, std::int64_t b);

/// True iff no member of L attains both minima v_a and v_b, i.e.
/// Lambda_a and Lambda_b are disjoint. (With E_a and E_b meeting, this is
/// exactly when the transform contains their intersection.)
bool no_common_minimum(const SupportSet& support, std::int64_t a, std::int64_t b);

/// Euler characteristic of the projectivized fiber over v, computed by the
/// stratification over supports L with nu(L) = v: singleton strata
/// contribute 1, the rest are tori and contribute 0. The result is compared
/// against count_N and a mismatch throws structural_violation. When the
/// support exceeds the cap the stratification is skipped and count_N is
/// returned with stratified = false.
struct ChiResult {
    std::int64_t chi = 0;
    bool stratified = false;
};

ChiResult chi_PF(const SemigroupSpec& spec, const ValueVector& v, std::int64_t cap = 20);

} // namespace tps

#endif
