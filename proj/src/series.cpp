#include "tps/series.hpp"

#include "tps/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tps {

Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer out = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        out *= (n - k + i);
        out /= i;
    }
    return out;
}

TruncatedSeries TruncatedSeries::one(const TruncationBox& box) {
    TruncatedSeries s(box);
    s.add_term(MultiExponent::zeros(box.rank()), 1);
    return s;
}

Integer TruncatedSeries::coefficient(const MultiExponent& e) const {
    if (!box_.contains(e))
        throw input_error("coefficient query outside the truncation box: " + e.to_string());
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

void TruncatedSeries::add_term(const MultiExponent& e, const Integer& c) {
    if (c == 0 || !box_.contains(e)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
    if (box_ != rhs.box_) throw input_error("box mismatch in series addition");
    TruncatedSeries out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    if (box_ != rhs.box_) throw input_error("box mismatch in series multiplication");
    TruncatedSeries out(box_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            MultiExponent e = ea + eb;
            if (box_.contains(e)) out.add_term(e, ca * cb);
        }
    return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& rhs) const {
    return box_ == rhs.box_ && terms_ == rhs.terms_;
}

std::vector<std::pair<MultiExponent, Integer>> TruncatedSeries::sorted_terms() const {
    std::vector<std::pair<MultiExponent, Integer>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return graded_lex_less(a.first, b.first); });
    return out;
}

std::vector<MultiExponent> TruncatedSeries::diff(const TruncatedSeries& rhs) const {
    if (box_ != rhs.box_) throw input_error("box mismatch in series diff");
    std::set<MultiExponent, GradedLexLess> bad;
    for (const auto& [e, c] : terms_) {
        auto it = rhs.terms_.find(e);
        if (it == rhs.terms_.end() || it->second != c) bad.insert(e);
    }
    for (const auto& [e, c] : rhs.terms_)
        if (!terms_.count(e)) bad.insert(e);
    return {bad.begin(), bad.end()};
}

std::string TruncatedSeries::to_text() const {
    std::ostringstream os;
    os << "box";
    for (std::int64_t b : box_.bounds()) os << ' ' << b;
    os << '\n';
    for (const auto& [e, c] : sorted_terms()) {
        os << c;
        for (std::int64_t x : e) os << ' ' << x;
        os << '\n';
    }
    return os.str();
}

TruncatedSeries TruncatedSeries::from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw input_error("empty series text");
    std::istringstream header(line);
    std::string tag;
    header >> tag;
    if (tag != "box") throw input_error("series text must start with a box line");
    std::vector<std::int64_t> bounds;
    for (std::int64_t b; header >> b;) bounds.push_back(b);
    TruncatedSeries out{TruncationBox(MultiExponent(bounds))};
    const std::size_t r = bounds.size();
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Integer c;
        ls >> c;
        std::vector<std::int64_t> e(r);
        for (std::size_t i = 0; i < r; ++i)
            if (!(ls >> e[i])) throw input_error("malformed series term: " + line);
        out.add_term(MultiExponent(e), c);
    }
    return out;
}

FactoredRationalSeries::FactoredRationalSeries(std::vector<Factor> factors)
    : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Factor& f = factors_[i];
        if (f.exponent.size() != factors_.front().exponent.size())
            throw input_error("factored series: mixed exponent ranks");
        if (!f.exponent.all_positive())
            throw input_error("factored series: factor exponent " + f.exponent.to_string() +
                              " has a nonpositive entry; expansion would not truncate");
        if (f.multiplicity < 1) throw input_error("factored series: multiplicity must be >= 1");
        for (std::size_t j = 0; j < i; ++j)
            if (factors_[j].exponent == f.exponent)
                throw input_error("factored series: repeated exponent " + f.exponent.to_string());
    }
}

std::int64_t FactoredRationalSeries::total_multiplicity() const {
    std::int64_t s = 0;
    for (const Factor& f : factors_) s += f.multiplicity;
    return s;
}

std::string FactoredRationalSeries::to_text() const {
    std::ostringstream os;
    os << "1/(";
    for (const Factor& f : factors_) {
        os << "(1-t^" << f.exponent.to_string() << ')';
        if (f.multiplicity > 1) os << '^' << f.multiplicity;
    }
    os << ')';
    return os.str();
}

TruncatedSeries expand_factored(const FactoredRationalSeries& f, const TruncationBox& box) {
    TruncatedSeries acc = TruncatedSeries::one(box);
    for (const auto& [v, m] : f.factors()) {
        if (v.size() != box.rank())
            throw input_error("factored series rank does not match the box");
        // sum_{n>=0} C(m+n-1, n) t^{n v}, truncated
        TruncatedSeries geom(box);
        MultiExponent e = MultiExponent::zeros(box.rank());
        for (std::int64_t n = 0; box.contains(e); ++n, e += v)
            geom.add_term(e, binomial(m + n - 1, n));
        acc = acc * geom;
    }
    return acc;
}

TruncatedSeries denominator_polynomial(const FactoredRationalSeries& f, const TruncationBox& box) {
    TruncatedSeries acc = TruncatedSeries::one(box);
    for (const auto& [v, m] : f.factors())
        for (std::int64_t i = 0; i < m; ++i) {
            TruncatedSeries lin(box);
            lin.add_term(MultiExponent::zeros(box.rank()), 1);
            lin.add_term(v, -1);
            acc = acc * lin;
        }
    return acc;
}

} // namespace tps
