#pragma once

#include <string>
#include <vector>

#include "torusobs/expoly.hpp"
#include "torusobs/lattice.hpp"
#include "torusobs/types.hpp"

namespace torusobs::clusters {

// Connected components of the proximity graph with edges {p,q : |p-q| < rho}
// (strict; ties at exactly rho are non-edges).  Components and their points
// are canonically ordered.
struct Partition {
    double rho = 0;
    std::vector<std::vector<Point>> components;
};

Partition partition(const std::vector<Point>& points, double rho);

// Exact-threshold variant used by realized-distance sweeps: edges are pairs
// with squared distance strictly below d2_threshold, compared in integers.
Partition partition_strict_d2(const std::vector<Point>& points,
                              std::int64_t d2_threshold);

// Sliding angular window on S_2(sqrt(n)): records every arc of length
// strictly below the threshold containing more than m points.
//   m == 2: threshold sqrt(2) lambda^{1/3}
//   else:   threshold sqrt(2) lambda^{1/2 - delta(m)}, delta(m) = 1/(4 floor(m/2) + 2)
struct ArcViolation {
    std::int64_t n = 0;
    std::size_t start_index = 0;  // into the angularly sorted point list
    double arc_length = 0;
};

struct ArcCheck {
    std::int64_t n = 0;
    int m = 0;
    double threshold = 0;
    std::vector<ArcViolation> violations;
};

ArcCheck arc_window_check(std::int64_t n, int m);

// Parallel sweep over n in [n_lo, n_hi]; results indexed by n.
std::vector<ArcCheck> arc_window_sweep(std::int64_t n_lo, std::int64_t n_hi, int m);
std::vector<ArcCheck> arc_window_sweep_serial(std::int64_t n_lo, std::int64_t n_hi,
                                              int m);

// True iff the points lie on an affine hyperplane: exact integer rank of
// {p - p0} is <= d-1.  Two or fewer points always pass.
bool is_affine_hyperplane(const std::vector<Point>& points);

// Largest realized pairwise distance rho* such that every component of
// partition(points, rho*) lies on an affine hyperplane; +infinity when the
// whole set does.
double connes_threshold(const lattice::SphereSet& sphere);

// Product cubic-B-spline cutoff chi >= 0 supported in B_sigma with
//   chihat(xi) = prod_j (sin(sigma xi_j / 8) / (sigma xi_j / 8))^4
// (normalized so chihat(0) = 1) and the certified envelope
//   E(t) = min(1, (8 sqrt(d) / (sigma t))^4).
// The cube support fits inside B_sigma only for d <= 4.
struct CutoffSpec {
    double sigma = 1.0;

    double fhat(const std::vector<double>& xi) const;
    double envelope(int d, double t) const;
    double spatial(const std::vector<double>& x) const;
    void validate(int d) const;
};

// Fourier-side gap between the windowed mass of u and the sum of its
// component projections, against the envelope bound
// (1/2) #V E(r rho) ||u||^2.
struct DecompositionGap {
    double lhs_gap = 0;
    double rhs_bound = 0;
    bool holds = false;
};

DecompositionGap decomposition_gap(const ExponentialPolynomial& u, double rho,
                                   double r, const CutoffSpec& cutoff);

}  // namespace torusobs::clusters
