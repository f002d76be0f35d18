#include "tps/exact_linalg.hpp"

#include "tps/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace tps {

namespace {

using BigMatrix = std::vector<std::vector<Integer>>;

BigMatrix widen(const IntMatrix& m) {
    BigMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i].assign(m[i].begin(), m[i].end());
    return out;
}

} // namespace

std::vector<Integer> smith_normal_form(const IntMatrix& input) {
    BigMatrix a = widen(input);
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    const std::size_t n = std::min(rows, cols);
    std::vector<Integer> divisors(n, 0);

    std::size_t t = 0;
    while (t < n) {
        // smallest nonzero pivot in the trailing block
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 &&
                    (!found || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break; // rest of the matrix is zero
        std::swap(a[t], a[pi]);
        for (std::size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i)
            if (a[i][t] != 0) {
                Integer q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
        for (std::size_t j = t + 1; j < cols; ++j)
            if (a[t][j] != 0) {
                Integer q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
        if (!clean) continue; // pivot shrank somewhere, repeat with same t

        // divisibility condition: pivot must divide the trailing block
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i)
            for (std::size_t j = t + 1; j < cols && divides; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    for (std::size_t l = t; l < cols; ++l) a[t][l] += a[i][l];
                    divides = false;
                }
        if (!divides) continue;

        divisors[t] = abs(a[t][t]);
        ++t;
    }
    return divisors;
}

bool is_unimodular_basis(const std::vector<Integer>& divisors) {
    return std::all_of(divisors.begin(), divisors.end(),
                       [](const Integer& d) { return d == 1; });
}

Integer determinant(const IntMatrix& input) {
    BigMatrix a = widen(input);
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw input_error("determinant of a non-square matrix");
    // fraction-free Bareiss elimination
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? Integer(1) : Integer(sign) * a[n - 1][n - 1];
}

std::optional<std::vector<Rational>> solve_full_column_rank(const IntMatrix& a,
                                                            const std::vector<std::int64_t>& b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw input_error("rhs length does not match the matrix");
    const std::size_t cols = rows ? a[0].size() : 0;

    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
        m[i][cols] = b[i];
    }

    std::vector<std::size_t> pivot_row(cols);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t p = rank;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows)
            throw structural_violation("columns expected independent are linearly dependent");
        std::swap(m[rank], m[p]);
        const Rational inv = m[rank][col];
        for (std::size_t j = col; j <= cols; ++j) m[rank][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j <= cols; ++j) m[i][j] -= f * m[rank][j];
        }
        pivot_row[col] = rank;
        ++rank;
    }
    for (std::size_t i = rank; i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt; // inconsistent
    std::vector<Rational> x(cols);
    for (std::size_t col = 0; col < cols; ++col) x[col] = m[pivot_row[col]][cols];
    return x;
}

std::optional<std::vector<std::int64_t>> as_nonnegative_integers(const std::vector<Rational>& x) {
    std::vector<std::int64_t> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (denominator(x[i]) != 1) return std::nullopt;
        const Integer n = numerator(x[i]);
        if (n < 0) return std::nullopt;
        out[i] = n.convert_to<std::int64_t>();
    }
    return out;
}

} // namespace tps
