#ifndef TPS_MULTI_EXPONENT_HPP
#define TPS_MULTI_EXPONENT_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace tps {

/// Integer vector used both for exponents in Z^d and for value vectors in
/// Z^r. The ambient rank is fixed by whatever container holds it.
class MultiExponent {
public:
    MultiExponent() = default;
    explicit MultiExponent(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
    MultiExponent(std::initializer_list<std::int64_t> init) : entries_(init) {}

    static MultiExponent zeros(std::size_t rank) {
        return MultiExponent(std::vector<std::int64_t>(rank, 0));
    }
    static MultiExponent unit(std::size_t rank, std::size_t axis);

    std::size_t size() const { return entries_.size(); }
    std::int64_t operator[](std::size_t i) const { return entries_[i]; }
    std::int64_t& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<std::int64_t>& entries() const { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    MultiExponent operator+(const MultiExponent& rhs) const;
    MultiExponent& operator+=(const MultiExponent& rhs);

    bool operator==(const MultiExponent& rhs) const { return entries_ == rhs.entries_; }
    bool operator!=(const MultiExponent& rhs) const { return entries_ != rhs.entries_; }

    /// Componentwise comparison (the partial order of the filtration).
    bool leq(const MultiExponent& rhs) const;
    bool all_nonnegative() const;
    bool all_positive() const;

    std::int64_t total() const;

    std::string to_string() const; // "(a,b,c)"

private:
    std::vector<std::int64_t> entries_;
};

/// Total order: degree first, then lexicographic. Used for every
/// canonical/serialized ordering in the project.
bool graded_lex_less(const MultiExponent& a, const MultiExponent& b);

struct GradedLexLess {
    bool operator()(const MultiExponent& a, const MultiExponent& b) const {
        return graded_lex_less(a, b);
    }
};

struct MultiExponentHash {
    std::size_t operator()(const MultiExponent& e) const {
        std::size_t h = 1469598103934665603ull;
        for (std::int64_t x : e) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// A value vector lives in Z^r; the alias keeps signatures readable.
using ValueVector = MultiExponent;

/// Finite window on Z_{>=0}^r: a term with exponent e is kept iff
/// 0 <= e <= bounds componentwise.
class TruncationBox {
public:
    TruncationBox() = default;
    explicit TruncationBox(MultiExponent bounds);
    TruncationBox(std::initializer_list<std::int64_t> init) : TruncationBox(MultiExponent(init)) {}

    std::size_t rank() const { return bounds_.size(); }
    const MultiExponent& bounds() const { return bounds_; }

    bool contains(const MultiExponent& e) const;

    bool operator==(const TruncationBox& rhs) const { return bounds_ == rhs.bounds_; }
    bool operator!=(const TruncationBox& rhs) const { return bounds_ != rhs.bounds_; }

private:
    MultiExponent bounds_;
};

} // namespace tps

#endif
