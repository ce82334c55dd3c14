#pragma once

#include <cmath>
#include <vector>

#include "torusobs/types.hpp"

namespace torusobs::quad {

struct Rule1D {
    std::vector<double> x;  // nodes on [-1,1]
    std::vector<double> w;
};

// Gauss-Legendre nodes/weights by Newton iteration on P_n.
Rule1D gauss_legendre(int n);

// Mean value of f over the ball of radius r in dimension d (d <= 3), using
// polar/spherical product rules: Gauss-Legendre radially, uniform (spectrally
// accurate) angular grids.  `radial` Gauss nodes, `angular` azimuthal nodes.
template <class F>
double ball_mean(const F& f, int d, double r, int radial, int angular) {
    if (d < 1 || d > 3) throw domain_error("ball_mean: only d <= 3 supported");
    if (r <= 0) throw domain_error("ball_mean: radius must be > 0");
    const Rule1D g = gauss_legendre(radial);

    if (d == 1) {
        double s = 0;
        for (int i = 0; i < radial; ++i) {
            const double x = r * g.x[static_cast<std::size_t>(i)];
            s += g.w[static_cast<std::size_t>(i)] * f(&x);
        }
        return s / 2.0;  // weights sum to 2
    }

    if (d == 2) {
        // mean = (2/r^2) int_0^r rho f_avg(rho) rho' ... with uniform theta
        const double pi = std::acos(-1.0);
        double s = 0;
        for (int i = 0; i < radial; ++i) {
            const double rho = 0.5 * r * (g.x[static_cast<std::size_t>(i)] + 1.0);
            double ang = 0;
            for (int j = 0; j < angular; ++j) {
                const double th = 2.0 * pi * j / angular;
                const double p[2] = {rho * std::cos(th), rho * std::sin(th)};
                ang += f(p);
            }
            ang /= angular;
            s += g.w[static_cast<std::size_t>(i)] * rho * ang;
        }
        s *= 0.5 * r;            // map [-1,1] -> [0,r]
        return s * 2.0 / (r * r);  // divide by r^2/2 = int_0^r rho drho
    }

    // d == 3: radial x (Gauss in cos(phi)) x uniform theta
    const double pi = std::acos(-1.0);
    const int nu = std::max(8, angular / 2);
    const Rule1D gu = gauss_legendre(nu);
    double s = 0;
    for (int i = 0; i < radial; ++i) {
        const double rho = 0.5 * r * (g.x[static_cast<std::size_t>(i)] + 1.0);
        double sph = 0;
        for (int a = 0; a < nu; ++a) {
            const double u = gu.x[static_cast<std::size_t>(a)];
            const double su = std::sqrt(std::max(0.0, 1.0 - u * u));
            double ang = 0;
            for (int j = 0; j < angular; ++j) {
                const double th = 2.0 * pi * j / angular;
                const double p[3] = {rho * su * std::cos(th), rho * su * std::sin(th),
                                     rho * u};
                ang += f(p);
            }
            sph += gu.w[static_cast<std::size_t>(a)] * ang / angular;
        }
        sph /= 2.0;  // mean over the sphere: weights sum to 2
        s += g.w[static_cast<std::size_t>(i)] * rho * rho * sph;
    }
    s *= 0.5 * r;
    return s * 3.0 / (r * r * r);  // divide by int_0^r rho^2 drho = r^3/3
}

}  // namespace torusobs::quad
