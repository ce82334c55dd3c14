#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torusobs/ball_kernel.hpp"
#include "torusobs/expoly.hpp"
#include "torusobs/jacobi.hpp"
#include "torusobs/lattice.hpp"
#include "torusobs/types.hpp"

namespace torusobs::obs {

// Symmetric matrix G[k][l] = B_d(r |k - l|) over a frequency set; its
// smallest eigenvalue is the observability constant restricted to the set.
struct GramMatrix {
    int d = 0;
    double r = 0;
    std::vector<Point> points;
    std::vector<double> a;  // row-major, points.size()^2

    std::size_t size() const { return points.size(); }
};

GramMatrix gram_matrix(const std::vector<Point>& points, int d, double r);
GramMatrix gram_matrix_serial(const std::vector<Point>& points, int d, double r);
GramMatrix gram_matrix(const lattice::SphereSet& sphere, double r);

EigenResult min_eigenvalue(const GramMatrix& g, double tol = 1e-12);

// Mean of |u|^2 over the r-ball via the kernel: sum_{k,l} c_k conj(c_l)
// B_d(r|k-l|).  rayleigh_quotient divides by the torus mean sum |c_k|^2.
double ball_mass(const ExponentialPolynomial& u, double r);
double rayleigh_quotient(const ExponentialPolynomial& u, double r);

// Independent quadrature route to the same mean (d <= 3); `level` sets the
// radial node count, angular resolution follows the frequency content.
double local_mass_oracle(const ExponentialPolynomial& u, double r, int level);

// Remainder bound for a function vanishing to order N:
//   sup_{B_r} |u| <= (r diam supp)^{N+1} / (N+1)!  * ||c||_1.
// The order is certified exactly from the rational coefficients first.
struct TaylorCheck {
    double sup_measured = 0;
    double bound = 0;
    bool holds = false;
};

TaylorCheck taylor_bound_check(const std::vector<Point>& support,
                               const std::vector<exact::Rational>& coeffs, int N,
                               double r);

// sqrt(count)/sqrt(N+1) * (e r diam / (N+1))^{N+1}, the displayed decay with
// constant 1 (order-of-magnitude evaluator; unknown dimensional constants are
// deliberately not modeled).
double upper_bound_eval(std::int64_t count, double diam, int N, double r);

struct FamilyReport {
    std::string family;
    std::vector<std::pair<std::string, double>> params;
    std::int64_t n = 0;      // squared radius of the carrying sphere
    std::int64_t count = 0;  // frequency support size
    double r = 0;
    double measured = 0;
    std::optional<double> bound;
    std::vector<std::string> notes;
    ExponentialPolynomial u;
};

// u_n = e^{i a.x} - e^{i b.x} with a = (n, n+1, 0, ...), b = (n+1, n, 0, ...);
// measured is the ball mean of |u|^2 with unit coefficients.
FamilyReport family_simple(int d, std::int64_t n_index, double r);

// Hyperplane construction: rho = (K r)^{2-d}, n' in (rho^2, 4 rho^2)
// maximizing N_{d-1}(sqrt(n')), kernel eigenfunction on S_{d-1}(sqrt(n'))
// lifted by e^{i x_d}; measured is the (d-1)-dimensional Rayleigh quotient.
FamilyReport family_hyperplane(int d, double K, double r);

// Wigert-style construction on S_2(sqrt(P_m)); measured is the 2-d Rayleigh
// quotient of the maximal-vanishing kernel eigenfunction.
FamilyReport family_wigert(std::int64_t m, double r);

// Formula evaluators for the recursion phi_d, the exponent h(d), the
// Cilleruelo-Cordoba exponents delta(m), and the per-unit Nazarov floor
// r^{2d} (so the full lower bound is floor^{min{N_d(lambda)-1, lambda}}).
struct ExponentTables {
    std::optional<double> phi;
    double h = 0;
    std::vector<std::pair<int, double>> delta_cc;
    double nazarov_floor = 0;
};

ExponentTables exponent_tables(int d, double r, double gamma, double D);

}  // namespace torusobs::obs
