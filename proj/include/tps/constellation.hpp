#ifndef TPS_CONSTELLATION_HPP
#define TPS_CONSTELLATION_HPP

#include "tps/exact_linalg.hpp"
#include "tps/multi_exponent.hpp"
#include "tps/semigroup.hpp"
#include "tps/series.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tps {

/// Weighted d-ary tree of infinitely near points. Point 0 is the origin;
/// every later point carries its parent index and the weight (1..d) of the
/// affine chart it is created in. Siblings never share a weight.
struct Constellation {
    struct Point {
        std::optional<std::int64_t> parent; // none for the root only
        std::optional<std::int64_t> weight; // none for the root only
    };

    std::int64_t dimension = 0;
    std::vector<Point> points;

    std::size_t point_count() const { return points.size(); }
    std::int64_t level(std::size_t index) const;
    std::int64_t distinct_weight_count() const;
};

struct ConstellationParseResult {
    std::optional<Constellation> constellation;
    std::vector<std::string> violations;
    bool ok() const { return constellation.has_value(); }
};

/// Validates the tree invariants; on failure the result lists one violation
/// per offending point.
ConstellationParseResult validate_constellation(Constellation candidate);

/// JSON form: {"dimension": d, "points": [{"parent": null|index,
/// "weight": null|1..d}, ...]} in creation order.
ConstellationParseResult parse_constellation(const std::string& json_text);

Constellation require_constellation(const std::string& json_text);

/// Chart bookkeeping for one point: row i is the exponent of local
/// coordinate i as a functional of the original exponents. The root map is
/// the identity; a child with weight w replaces row w of its parent's map by
/// the sum of all parent rows.
using ExponentMap = IntMatrix;

std::vector<ExponentMap> exponent_maps(const Constellation& c);

/// r x d matrix whose row j is the valuation vector of the divisor created
/// by blowing up point j: the column sums of point j's exponent map.
struct ValuationMatrix {
    IntMatrix entries; // entries[j] = nu_j in Z^d

    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return entries.empty() ? 0 : entries[0].size(); }
    MultiExponent row(std::size_t j) const { return MultiExponent(entries[j]); }
    MultiExponent column(std::size_t i) const;
};

ValuationMatrix valuation_matrix(const Constellation& c);

/// Column multiplicity analysis of L(C). Degenerate (s < d) must coincide
/// with "at most d-2 distinct weights", and a degenerate matrix must have
/// exactly one repeated column class; anything else throws
/// structural_violation because it contradicts a proven property.
struct DegeneracyReport {
    std::vector<ValueVector> distinct_columns;  // first-occurrence order
    std::optional<ValueVector> repeated_column;
    std::optional<std::size_t> repeated_index;  // into distinct_columns
    std::int64_t multiplicity_k = 1;            // d - s + 1; 1 when non-degenerate
    std::int64_t distinct_weight_count = 0;
    bool degenerate = false;
};

DegeneracyReport degeneracy_report(const ValuationMatrix& m, const Constellation& c);

struct RegularityCertificate {
    bool regular = false;
    std::vector<Integer> elementary_divisors; // of the distinct-column matrix
};

/// The distinct columns extend to a basis of Z^r iff all Smith divisors are 1.
RegularityCertificate regularity_check(const ValuationMatrix& m);

/// Unique nonnegative-integer coordinates of v in the distinct columns
/// (first-occurrence order), or nullopt when v lies outside the monomial
/// cone. Requires a regular matrix.
std::optional<std::vector<std::int64_t>> solve_cone_membership(const ValuationMatrix& m,
                                                               const ValueVector& v);

/// N(v) in closed form: 0 outside the cone, 1 inside a non-degenerate cone,
/// C(k + lambda - 1, lambda) in the degenerate case where lambda is the
/// coordinate of the repeated column.
std::int64_t closed_form_N(const ValuationMatrix& m, const DegeneracyReport& report,
                           const ValueVector& v);

/// 1 / prod over distinct columns of (1 - t^column)^multiplicity, the
/// repeated column carrying multiplicity k and listed last.
FactoredRationalSeries poincare_factored(const ValuationMatrix& m,
                                         const DegeneracyReport& report);

/// S = N^d with the matrix rows as valuations; always passes validation.
SemigroupSpec to_semigroup_spec(const Constellation& c);

/// L(C) * n: the value vector of the monomial x^n.
ValueVector monomial_values(const ValuationMatrix& m, const MultiExponent& n);

/// The chart "c_1 - ... - c_t": the root chain up to `path_node` plus one
/// final weight. K[i] is the maximal-level chain point whose outgoing weight
/// is i+1, if any.
struct ChartContext {
    std::vector<std::size_t> chain;          // point indices, root first
    std::vector<std::int64_t> weights;       // outgoing weights along the chain
    std::vector<std::optional<std::size_t>> K; // per coordinate, a point index
    std::int64_t dimension = 0;

    std::vector<std::size_t> defined_coordinates() const; // 0-based, ascending
};

ChartContext chart_context(const Constellation& c, std::size_t path_node,
                           std::int64_t final_weight);

/// Exponents of the strict transform of x^n in the chart: coordinate i gets
/// f_i(n) - h_i with f_i the valuation row of Q_{K_i} (or n_i when K_i is
/// undefined) and h_i the monomial's own value there.
MultiExponent strict_transform_exponents(const ChartContext& ctx, const ValuationMatrix& m,
                                         const MultiExponent& n);

/// h_i = <n, nu_{K_i}> for the defined coordinates in ascending order: the
/// exceptional multiplicities divided out of the monomial's own transform.
std::vector<std::int64_t> chart_values(const ChartContext& ctx, const ValuationMatrix& m,
                                       const MultiExponent& n);

/// Inverse of the transform: the unique n with the given strict-transform
/// exponents and exceptional multiplicities h (one entry per defined
/// coordinate, ascending). Throws input_error when the data is not
/// realizable by a monomial.
MultiExponent recover_monomial(const ChartContext& ctx, const ValuationMatrix& m,
                               const MultiExponent& strict,
                               const std::vector<std::int64_t>& h);

} // namespace tps

#endif
