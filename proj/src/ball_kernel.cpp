#include "torusobs/ball_kernel.hpp"

#include <cmath>
#include <vector>

#include "torusobs/types.hpp"

namespace torusobs::obs {

namespace {

// Alternating series B_d = sum_m (-1)^m [Gamma(nu+1)/(m! Gamma(m+nu+1))] (rho/2)^{2m},
// nu = d/2.  Compensated summation in long double; cancellation is mild for
// rho <= 12.
double series(int d, double rho) {
    const long double nu = 0.5L * d;
    const long double x2 = 0.25L * static_cast<long double>(rho) * rho;
    long double term = 1.0L, sum = 1.0L, comp = 0.0L;
    for (int m = 1; m < 200; ++m) {
        term *= -x2 / (static_cast<long double>(m) * (m + nu));
        const long double y = term - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::fabs(static_cast<double>(term)) < 1e-22) break;
    }
    return static_cast<double>(sum);
}

// Odd d: B_d = (2n+1)!! j_n(rho) / rho^n with n = (d-1)/2.  Upward spherical
// recurrence, stable here since n << rho.
double odd_closed_form(int d, double rho) {
    const int n = (d - 1) / 2;
    const long double x = rho;
    long double jm = std::sin(x) / x;  // j_0
    if (n == 0) return static_cast<double>(jm);
    long double j = std::sin(x) / (x * x) - std::cos(x) / x;  // j_1
    for (int k = 1; k < n; ++k) {
        const long double jn = (2 * k + 1) / x * j - jm;
        jm = j;
        j = jn;
    }
    long double fac = 1.0L;  // (2n+1)!!
    for (int k = 1; k <= 2 * n + 1; k += 2) fac *= k;
    return static_cast<double>(fac * j / std::pow(x, static_cast<long double>(n)));
}

// Even d: integer-order J_nu via Miller's downward recurrence with the
// normalization J_0 + 2 sum_{k>=1} J_{2k} = 1.
double even_miller(int d, double rho) {
    const int nu = d / 2;
    const long double x = rho;
    const int start = nu + static_cast<int>(rho) + 60;
    const int M = start + (start % 2);  // even start order
    long double jp = 0.0L, j = 1e-300L;
    long double norm = 0.0L, jnu = 0.0L;
    for (int k = M; k >= 1; --k) {
        const long double jm = (2.0L * k / x) * j - jp;
        jp = j;
        j = jm;
        // jp now holds J_k; accumulate even orders for the normalization
        if (k % 2 == 0) norm += 2.0L * jp;
        if (k == nu) jnu = jp;
        if (std::fabs(static_cast<double>(j)) > 1e250) {
            j *= 1e-250L;
            jp *= 1e-250L;
            norm *= 1e-250L;
            jnu *= 1e-250L;
        }
    }
    norm += j;  // J_0
    if (nu == 0) jnu = j;
    jnu /= norm;

    long double fac = 1.0L;  // Gamma(nu+1) = nu!
    for (int k = 2; k <= nu; ++k) fac *= k;
    return static_cast<double>(fac * std::pow(2.0L / x, static_cast<long double>(nu)) * jnu);
}

}  // namespace

double ball_kernel(int d, double rho) {
    if (d < 1) throw domain_error("ball_kernel: dimension must be >= 1");
    if (rho < 0) throw domain_error("ball_kernel: rho must be >= 0");
    if (rho == 0) return 1.0;
    if (rho <= 12.0) return series(d, rho);
    if (d % 2 == 1) return odd_closed_form(d, rho);
    return even_miller(d, rho);
}

}  // namespace torusobs::obs
