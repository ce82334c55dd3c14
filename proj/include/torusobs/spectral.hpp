#pragma once

#include <optional>
#include <vector>

#include "torusobs/exact.hpp"
#include "torusobs/types.hpp"

namespace torusobs::spectral {

// Differentiation multi-index alpha in N^d.
struct MultiIndex {
    std::vector<int> alpha;
    int degree = 0;
};

// Rows for degree cap N: when reduced, all alpha with |alpha| <= N and
// alpha_d in {0,1} (the |k|^2 = lambda^2 reduction); otherwise all
// |alpha| <= N.  Ordering: reduced lists the alpha_d = 0 block then the
// alpha_d = 1 block, each graded-lexicographic; full is graded-lexicographic.
std::vector<MultiIndex> multi_indices(int d, int N, bool reduced);

// Exact integer matrix M[alpha][k] = k^alpha (0^0 = 1).
struct MomentMatrix {
    std::vector<MultiIndex> rows;
    std::vector<Point> cols;
    exact::IntMatrix entries;
    bool reduced = false;
    int degree_cap = 0;
};

MomentMatrix moment_matrix(const std::vector<Point>& points, int N, bool reduced);

int exact_rank(const MomentMatrix& m);

// Fourier coefficients of an eigenfunction, exact rationals aligned with a
// point list.
using RationalVector = std::vector<exact::Rational>;

std::optional<RationalVector> kernel_vector(const MomentMatrix& m);

// Largest N <= N_max with sum_k coeffs[k] k^alpha = 0 for all |alpha| <= N;
// -1 when the alpha = 0 moment is already nonzero.  Returning N_max means
// every check up to N_max passed (raise N_max to certify further).
int vanishing_order(const RationalVector& coeffs, const std::vector<Point>& points,
                    int N_max);

// Largest N <= N_max such that the full moment matrix of the sphere has a
// nontrivial kernel; asserts at each step that the reduced matrix gives the
// same verdict.  Returns -1 when no admissible N exists (single-point sets).
int gamma_max(int d, std::int64_t n, int N_max);

// Largest N with a guaranteed kernel by counting, plus the two upper bounds.
//   lower:   largest N with C(N+d-1,d-1) + C(N+d-2,d-1) < N_d(lambda)
//   upper_M: floor(min{N_d(lambda)-1, 2 d lambda}) - 1
//   upper_D: N_d(lambda) - 2 for d = 2; for d >= 3,
//            2(d-2) lambda + exp(C_arith ln lambda / ln ln lambda) - 1,
//            absent when lambda <= e.
struct GammaBounds {
    std::int64_t lower = -1;
    std::int64_t upper_M = -1;
    std::optional<double> upper_D;
};

GammaBounds gamma_bounds(int d, std::int64_t n, double C_arith);

// Helper shared with the observability families: largest N whose reduced row
// count is still below `count`, or -1.
std::int64_t guaranteed_order(int d, std::int64_t count);

exact::BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace torusobs::spectral
