#ifndef TPS_SERIES_HPP
#define TPS_SERIES_HPP

#include "tps/multi_exponent.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tps {

using Integer = boost::multiprecision::cpp_int;

Integer binomial(std::int64_t n, std::int64_t k);

/// Sparse integer-coefficient series supported in a finite box.
/// Canonical form: no zero coefficients, every stored exponent inside the box.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(TruncationBox box) : box_(std::move(box)) {}

    static TruncatedSeries one(const TruncationBox& box);

    const TruncationBox& box() const { return box_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Stored coefficient or 0; throws input_error outside the box so that a
    /// truncated-away term is never confused with a true zero.
    Integer coefficient(const MultiExponent& e) const;

    /// Adds c*t^e, dropping the term if it falls outside the box and keeping
    /// the zero-free canonical form.
    void add_term(const MultiExponent& e, const Integer& c);

    TruncatedSeries operator+(const TruncatedSeries& rhs) const;
    TruncatedSeries operator*(const TruncatedSeries& rhs) const;

    bool operator==(const TruncatedSeries& rhs) const;
    bool operator!=(const TruncatedSeries& rhs) const { return !(*this == rhs); }

    /// Terms in graded-lex order.
    std::vector<std::pair<MultiExponent, Integer>> sorted_terms() const;

    /// Exponents where the two series differ (graded-lex order).
    std::vector<MultiExponent> diff(const TruncatedSeries& rhs) const;

    /// Canonical text form: "box b1 ... br" header, then one term per line
    /// "coef e1 ... er" in graded-lex order.
    std::string to_text() const;
    static TruncatedSeries from_text(const std::string& text);

private:
    TruncationBox box_;
    std::unordered_map<MultiExponent, Integer, MultiExponentHash> terms_;
};

/// Product form prod_i (1 - t^{v_i})^{-m_i} with pairwise distinct v_i,
/// every v_i strictly positive componentwise, m_i >= 1.
class FactoredRationalSeries {
public:
    struct Factor {
        MultiExponent exponent;
        std::int64_t multiplicity = 1;
        bool operator==(const Factor& rhs) const = default;
    };

    FactoredRationalSeries() = default;
    explicit FactoredRationalSeries(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.empty() ? 0 : factors_.front().exponent.size(); }
    std::int64_t total_multiplicity() const;

    bool operator==(const FactoredRationalSeries& rhs) const { return factors_ == rhs.factors_; }

    /// "1/((1-t^(1,2))(1-t^(2,3))^2)"
    std::string to_text() const;

private:
    std::vector<Factor> factors_;
};

/// Power-series expansion of the factored form inside the box. The
/// coefficient of t^w counts multiplicity-weighted representations of w as a
/// nonnegative combination of the factor exponents.
TruncatedSeries expand_factored(const FactoredRationalSeries& f, const TruncationBox& box);

/// (1 - t^{v_1})^{m_1} ... as a truncated polynomial; used to check that the
/// expansion really inverts the denominator inside the box.
TruncatedSeries denominator_polynomial(const FactoredRationalSeries& f, const TruncationBox& box);

} // namespace tps

#endif
