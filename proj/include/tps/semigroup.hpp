#ifndef TPS_SEMIGROUP_HPP
#define TPS_SEMIGROUP_HPP

#include "tps/multi_exponent.hpp"
#include "tps/series.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tps {

/// Finitely generated subsemigroup of Z^d together with the valuation
/// vectors nu_1..nu_r acting on it by the standard pairing. Duplicate
/// generators are dropped at construction.
struct SemigroupSpec {
    std::int64_t dimension = 0;
    std::vector<MultiExponent> generators;
    std::vector<MultiExponent> valuations;

    std::size_t valuation_count() const { return valuations.size(); }

    /// <s, nu_j> for every j, as a vector in Z^r.
    ValueVector value_profile(const MultiExponent& s) const;
};

SemigroupSpec make_semigroup_spec(std::int64_t dimension, std::vector<MultiExponent> generators,
                                  std::vector<MultiExponent> valuations);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> issues;
};

/// Checks the two load-time invariants: every generator pairs strictly
/// positively with every valuation, and the generators generate Z^d as a
/// group (all Smith divisors of the generator matrix equal 1).
ValidationReport validate(const SemigroupSpec& spec);

void require_valid(const SemigroupSpec& spec);

struct SemigroupElement {
    MultiExponent exponent;     // in Z^d
    ValueVector values;         // in Z^r

    bool operator==(const SemigroupElement& rhs) const = default;
};

/// All distinct elements whose full value profile fits in the box,
/// graded-lex sorted by exponent. Breadth-first closure under generator
/// addition; terminates because every generator strictly increases every
/// value coordinate.
std::vector<SemigroupElement> enumerate_elements(const SemigroupSpec& spec,
                                                 const TruncationBox& box);

/// All elements with at least one value coordinate <= the matching bound
/// coordinate (bounds < 0 never match). This is the finite frontier behind
/// the quotient-dimension and support computations.
std::vector<SemigroupElement> enumerate_elements_with_some_coordinate_below(
    const SemigroupSpec& spec, const ValueVector& bound);

/// N(v): number of elements with value profile exactly v.
std::int64_t count_N(const SemigroupSpec& spec, const ValueVector& v);

/// Sum of t^{value profile} over the enumerated elements: the image of the
/// multigraded series Q under the value map, as a finite window.
TruncatedSeries pushforward_Q(const SemigroupSpec& spec, const TruncationBox& box);

/// dim I(w)/I(w+1) where I(w) = {g : nu_j(g) >= w_j for all j}. Negative
/// coordinates are vacuous (the ideals stabilize), so the count is
/// #{s : <s,nu> >= w componentwise and <s,nu_j> = w_j for some j with w_j >= 0}.
std::int64_t dim_quotient(const SemigroupSpec& spec, const ValueVector& w);

/// The Poincare series computed from its definition: the coefficient of t^v
/// is (-1)^{r+1} sum_{A subset {1..r}} (-1)^{#A} dim C[S]/I(alpha_A(v)+1),
/// the closed form of the telescoping alternating sum. Rejects r > 16.
TruncatedSeries poincare_by_definition(const SemigroupSpec& spec, const TruncationBox& box);

} // namespace tps

#endif
