#include "torusobs/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "torusobs/types.hpp"

namespace torusobs::obs {

namespace {

double off_norm(const std::vector<double>& a, std::size_t n) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
}

// One cyclic sweep; rotations applied for |a_pq| above thresh.
void sweep(std::vector<double>& a, std::vector<double>* v, std::size_t n,
           double thresh) {
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const double apq = a[p * n + q];
            if (std::fabs(apq) <= thresh) continue;
            const double app = a[p * n + p];
            const double aqq = a[q * n + q];
            const double theta = 0.5 * (aqq - app) / apq;
            double t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
            if (theta < 0) t = -t;
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            const double tau = s / (1.0 + c);

            a[p * n + p] = app - t * apq;
            a[q * n + q] = aqq + t * apq;
            a[p * n + q] = 0;
            a[q * n + p] = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == p || k == q) continue;
                const double akp = a[k * n + p];
                const double akq = a[k * n + q];
                a[k * n + p] = akp - s * (akq + tau * akp);
                a[k * n + q] = akq + s * (akp - tau * akq);
                a[p * n + k] = a[k * n + p];
                a[q * n + k] = a[k * n + q];
            }
            if (v) {
                auto& vv = *v;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = vv[k * n + p];
                    const double vkq = vv[k * n + q];
                    vv[k * n + p] = vkp - s * (vkq + tau * vkp);
                    vv[k * n + q] = vkq + s * (vkp - tau * vkq);
                }
            }
        }
    }
}

int iterate(std::vector<double>& a, std::vector<double>* v, std::size_t n,
            double tol, int sweep_cap) {
    for (int it = 1; it <= sweep_cap; ++it) {
        const double off = off_norm(a, n);
        if (off <= tol) return it - 1;
        // First sweeps use a decaying threshold so large entries go first.
        const double thresh = it <= 3 ? 0.2 * off / static_cast<double>(n * n) : 0.0;
        sweep(a, v, n, thresh);
    }
    if (off_norm(a, n) <= tol) return sweep_cap;
    throw convergence_error("jacobi: sweep cap exceeded (off-norm " +
                            std::to_string(off_norm(a, n)) + ")");
}

}  // namespace

EigenResult jacobi_smallest(std::vector<double> a, std::size_t n, double tol,
                            int sweep_cap) {
    if (n == 0) throw domain_error("jacobi: empty matrix");
    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

    EigenResult r;
    r.sweeps = iterate(a, &v, n, tol, sweep_cap);

    std::size_t imin = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (a[i * n + i] < a[imin * n + imin]) imin = i;
    r.value = a[imin * n + imin];
    r.vector.resize(n);
    for (std::size_t k = 0; k < n; ++k) r.vector[k] = v[k * n + imin];

    // Deterministic sign: largest-magnitude component positive.
    std::size_t big = 0;
    for (std::size_t k = 1; k < n; ++k)
        if (std::fabs(r.vector[k]) > std::fabs(r.vector[big])) big = k;
    if (r.vector[big] < 0)
        for (auto& x : r.vector) x = -x;
    return r;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n,
                                       double tol, int sweep_cap) {
    if (n == 0) throw domain_error("jacobi: empty matrix");
    iterate(a, nullptr, n, tol, sweep_cap);
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i * n + i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace torusobs::obs
