#include "tps/multi_exponent.hpp"

#include "tps/errors.hpp"

#include <sstream>

namespace tps {

MultiExponent MultiExponent::unit(std::size_t rank, std::size_t axis) {
    MultiExponent e = zeros(rank);
    e[axis] = 1;
    return e;
}

MultiExponent MultiExponent::operator+(const MultiExponent& rhs) const {
    MultiExponent out = *this;
    out += rhs;
    return out;
}

MultiExponent& MultiExponent::operator+=(const MultiExponent& rhs) {
    if (entries_.size() != rhs.entries_.size())
        throw input_error("rank mismatch in exponent addition");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

bool MultiExponent::leq(const MultiExponent& rhs) const {
    if (entries_.size() != rhs.entries_.size())
        throw input_error("rank mismatch in exponent comparison");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] > rhs.entries_[i]) return false;
    return true;
}

bool MultiExponent::all_nonnegative() const {
    for (std::int64_t x : entries_)
        if (x < 0) return false;
    return true;
}

bool MultiExponent::all_positive() const {
    for (std::int64_t x : entries_)
        if (x <= 0) return false;
    return true;
}

std::int64_t MultiExponent::total() const {
    std::int64_t s = 0;
    for (std::int64_t x : entries_) s += x;
    return s;
}

std::string MultiExponent::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ',';
        os << entries_[i];
    }
    os << ')';
    return os.str();
}

bool graded_lex_less(const MultiExponent& a, const MultiExponent& b) {
    const std::int64_t da = a.total();
    const std::int64_t db = b.total();
    if (da != db) return da < db;
    return a.entries() < b.entries();
}

TruncationBox::TruncationBox(MultiExponent bounds) : bounds_(std::move(bounds)) {
    if (!bounds_.all_nonnegative()) throw input_error("truncation box bounds must be nonnegative");
}

bool TruncationBox::contains(const MultiExponent& e) const {
    if (e.size() != bounds_.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] > bounds_[i]) return false;
    return true;
}

} // namespace tps
