#include "torusobs/exact.hpp"

#include <cstdlib>

namespace torusobs::exact {

namespace {

// Fraction-free forward elimination (Bareiss).  Returns the echelon form in
// place together with the pivot column of each pivot row.  Pivot rule: in the
// current column take the nonzero candidate of smallest absolute value
// (lowest row index on ties), which keeps intermediate minors small.
std::vector<std::size_t> echelonize(IntMatrix& m) {
    std::vector<std::size_t> pivot_cols;
    BigInt prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t best = m.rows;
        for (std::size_t i = row; i < m.rows; ++i) {
            if (sgn(m.at(i, col)) == 0) continue;
            if (best == m.rows ||
                mpz_cmpabs(m.at(i, col).get_mpz_t(), m.at(best, col).get_mpz_t()) < 0)
                best = i;
        }
        if (best == m.rows) continue;
        if (best != row)
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m.at(row, j), m.at(best, j));

        const BigInt piv = m.at(row, col);
        for (std::size_t i = row + 1; i < m.rows; ++i) {
            const BigInt factor = m.at(i, col);
            for (std::size_t j = col + 1; j < m.cols; ++j) {
                BigInt t = m.at(i, j) * piv - factor * m.at(row, j);
                // Bareiss guarantees exact divisibility by the previous pivot.
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, col) = 0;
        }
        prev = piv;
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

int rank(IntMatrix m) {
    return static_cast<int>(echelonize(m).size());
}

std::optional<std::vector<Rational>> kernel_vector(IntMatrix m) {
    const std::size_t n = m.cols;
    const auto pivot_cols = echelonize(m);
    const std::size_t r = pivot_cols.size();
    if (r >= n) return std::nullopt;

    // First non-pivot column becomes the free variable, set to 1.
    std::vector<char> is_pivot(n, 0);
    for (std::size_t c : pivot_cols) is_pivot[c] = 1;
    std::size_t free_col = 0;
    while (free_col < n && is_pivot[free_col]) ++free_col;

    std::vector<Rational> x(n, Rational(0));
    x[free_col] = 1;
    for (std::size_t bi = r; bi-- > 0;) {
        const std::size_t pc = pivot_cols[bi];
        Rational s = 0;
        for (std::size_t j = pc + 1; j < n; ++j) {
            if (sgn(x[j]) == 0) continue;
            s += Rational(m.at(bi, j)) * x[j];
        }
        x[pc] = -s / Rational(m.at(bi, pc));
        x[pc].canonicalize();
    }

    std::size_t lead = 0;
    while (lead < n && sgn(x[lead]) == 0) ++lead;
    const Rational scale = x[lead];
    for (auto& v : x) {
        v /= scale;
        v.canonicalize();
    }
    return x;
}

int affine_rank(const std::vector<Point>& points) {
    if (points.size() <= 1) return 0;
    const std::size_t d = points[0].size();
    IntMatrix m(points.size() - 1, d);
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < d; ++j)
            m.at(i - 1, j) = BigInt(points[i][j] - points[0][j]);
    return rank(std::move(m));
}

}  // namespace torusobs::exact
