#pragma once

#include <optional>
#include <vector>

#include "torusobs/exact.hpp"
#include "torusobs/types.hpp"

namespace torusobs::lattice {

// All integer points with |k|^2 = n in Z^d, canonically (lexicographically)
// sorted.  n is the squared radius, so lambda = sqrt(n).
struct SphereSet {
    int d = 0;
    std::int64_t n = 0;
    std::vector<Point> points;

    std::int64_t count() const { return static_cast<std::int64_t>(points.size()); }
};

// Parallel enumeration (splits on the first coordinate).  Output is identical
// to the serial reference below.
SphereSet enumerate_sphere(int d, std::int64_t n);
SphereSet enumerate_sphere_serial(int d, std::int64_t n);

// Jacobi's two-squares count 4*(d_1(n) - d_3(n)), d_j = #divisors = j (mod 4).
std::int64_t r2_via_divisors(std::int64_t n);

// Legendre three-square criterion: true iff n = 4^a (8b+7), i.e. the sphere
// |k|^2 = n in Z^3 is empty.  Note the classical statement is "no
// representation iff n = 4^a(8b+7)"; this operation follows the classical
// direction and is verified against enumeration.
bool is_three_square_excluded(std::int64_t n);

// Cap occupancy of a sphere set at radius parameter R:
//   count_lower: max over points p of #{q : |q-p| <= R} (such a set has
//                diameter <= 2R, hence a valid lower bound);
//   count_exact: maximum subset of diameter <= 2R, by branch-and-bound clique
//                search, computed only when count() <= exact_limit;
//   density:     count^{1/(d-1)} / R for the best available count.
struct CapStatistics {
    double R = 0;
    std::int64_t count_lower = 0;
    std::optional<std::int64_t> count_exact;
    double density = 0;
};

CapStatistics cap_statistics(const SphereSet& sphere, double R,
                             std::int64_t exact_limit = 64);

// Primes = 1 (mod 4) up to m, their count and product.
struct PrimeProduct {
    std::int64_t m = 0;
    std::vector<std::int64_t> primes;
    int omega = 0;
    exact::BigInt product;
};

PrimeProduct primes_one_mod_four(std::int64_t m);

// Trial-division factorization, documented for n up to ~1e10.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

}  // namespace torusobs::lattice
