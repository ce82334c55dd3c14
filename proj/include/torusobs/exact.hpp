#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "torusobs/types.hpp"

namespace torusobs::exact {

using BigInt = mpz_class;
using Rational = mpq_class;

// Dense row-major matrix of arbitrary-precision integers.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BigInt> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    BigInt& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Rank over Q by fraction-free (Bareiss) elimination.  No floating point.
int rank(IntMatrix m);

// One nonzero rational kernel vector when nullity > 0, normalized so the
// first nonzero entry equals 1.  Deterministic: fraction-free forward
// elimination with a fixed pivot rule, then exact back-substitution for the
// first free column.
std::optional<std::vector<Rational>> kernel_vector(IntMatrix m);

// Rank of the set {p - p0} for integer points, exact.
int affine_rank(const std::vector<Point>& points);

}  // namespace torusobs::exact
