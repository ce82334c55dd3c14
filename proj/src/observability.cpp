#include "torusobs/observability.hpp"

#include <algorithm>
#include <cmath>

#include "torusobs/quadrature.hpp"
#include "torusobs/spectral.hpp"

namespace torusobs::obs {

namespace {

void fill_rows(GramMatrix& g, std::int64_t i) {
    const std::size_t n = g.points.size();
    const auto ii = static_cast<std::size_t>(i);
    g.a[ii * n + ii] = 1.0;
    for (std::size_t j = ii + 1; j < n; ++j) {
        const double rho =
            g.r * std::sqrt(static_cast<double>(dist2(g.points[ii], g.points[j])));
        const double v = ball_kernel(g.d, rho);
        g.a[ii * n + j] = v;
        g.a[j * n + ii] = v;
    }
}

GramMatrix gram_common(const std::vector<Point>& points, int d, double r) {
    if (points.empty()) throw domain_error("gram_matrix: empty point set");
    if (r <= 0) throw domain_error("gram_matrix: radius must be > 0");
    GramMatrix g;
    g.d = d;
    g.r = r;
    g.points = points;
    g.a.assign(points.size() * points.size(), 0.0);
    return g;
}

}  // namespace

GramMatrix gram_matrix_serial(const std::vector<Point>& points, int d, double r) {
    GramMatrix g = gram_common(points, d, r);
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(points.size()); ++i)
        fill_rows(g, i);
    return g;
}

GramMatrix gram_matrix(const std::vector<Point>& points, int d, double r) {
    GramMatrix g = gram_common(points, d, r);
    const auto n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_cap())
    for (std::int64_t i = 0; i < n; ++i) fill_rows(g, i);
    return g;
}

GramMatrix gram_matrix(const lattice::SphereSet& sphere, double r) {
    return gram_matrix(sphere.points, sphere.d, r);
}

EigenResult min_eigenvalue(const GramMatrix& g, double tol) {
    return jacobi_smallest(g.a, g.size(), tol);
}

double ball_mass(const ExponentialPolynomial& u, double r) {
    if (u.terms() == 0) throw domain_error("ball_mass: zero function");
    if (r <= 0) throw domain_error("ball_mass: radius must be > 0");
    double s = 0;
    for (const auto& c : u.coeffs) s += std::norm(c);
    for (std::size_t i = 0; i < u.terms(); ++i)
        for (std::size_t j = i + 1; j < u.terms(); ++j) {
            const double rho =
                r * std::sqrt(static_cast<double>(dist2(u.freqs[i], u.freqs[j])));
            s += 2.0 * (u.coeffs[i] * std::conj(u.coeffs[j])).real() *
                 ball_kernel(u.d, rho);
        }
    return s;
}

double rayleigh_quotient(const ExponentialPolynomial& u, double r) {
    const double n2 = u.norm2();
    if (n2 == 0) throw domain_error("rayleigh_quotient: zero function");
    return ball_mass(u, r) / n2;
}

double local_mass_oracle(const ExponentialPolynomial& u, double r, int level) {
    if (u.d > 3)
        throw domain_error("local_mass_oracle: tensor quadrature limited to d <= 3");
    if (r <= 0) throw domain_error("local_mass_oracle: radius must be > 0");
    if (level < 4) level = 4;
    const double maxf = std::sqrt(static_cast<double>(u.max_freq_norm2()));
    const int angular =
        std::max({64, level, 2 * static_cast<int>(std::ceil(2.0 * r * maxf)) + 32});
    return quad::ball_mean([&u](const double* x) { return u.abs2(x); }, u.d, r,
                           level, angular);
}

namespace {

// Grid maximum of |u| over the closed r-ball with zoom refinement; sampling
// only ever underestimates the true sup.
double sup_abs_on_ball(const ExponentialPolynomial& u, double r) {
    const int d = u.d;
    const int n0 = d == 1 ? 4096 : (d == 2 ? 192 : 48);
    double best = 0;
    std::vector<double> bx(static_cast<std::size_t>(d), 0.0);

    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    std::vector<double> x(static_cast<std::size_t>(d), 0.0);
    const auto total = static_cast<std::int64_t>(std::pow(n0 + 1, d));
    for (std::int64_t t = 0; t < total; ++t) {
        std::int64_t q = t;
        double nrm2 = 0;
        for (int c = 0; c < d; ++c) {
            const int ic = static_cast<int>(q % (n0 + 1));
            q /= (n0 + 1);
            x[static_cast<std::size_t>(c)] = -r + 2.0 * r * ic / n0;
            nrm2 += x[static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(c)];
        }
        if (nrm2 > r * r) continue;
        const double v = std::sqrt(u.abs2(x.data()));
        if (v > best) {
            best = v;
            bx = x;
        }
    }

    // local refinement: shrinking 5^d stencil, kept inside the ball
    double h = 2.0 * r / n0;
    for (int it = 0; it < 60; ++it) {
        bool moved = false;
        const auto stencil = static_cast<std::int64_t>(std::pow(5, d));
        for (std::int64_t t = 0; t < stencil; ++t) {
            std::int64_t q = t;
            double nrm2 = 0;
            for (int c = 0; c < d; ++c) {
                const int off = static_cast<int>(q % 5) - 2;
                q /= 5;
                x[static_cast<std::size_t>(c)] =
                    bx[static_cast<std::size_t>(c)] + off * h * 0.5;
                nrm2 += x[static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(c)];
            }
            if (nrm2 > r * r) {
                const double scale = r / std::sqrt(nrm2);
                for (int c = 0; c < d; ++c) x[static_cast<std::size_t>(c)] *= scale;
            }
            const double v = std::sqrt(u.abs2(x.data()));
            if (v > best) {
                best = v;
                bx = x;
                moved = true;
            }
        }
        if (!moved) h *= 0.5;
        if (h < 1e-13 * r) break;
    }
    return best;
}

}  // namespace

TaylorCheck taylor_bound_check(const std::vector<Point>& support,
                               const std::vector<exact::Rational>& coeffs, int N,
                               double r) {
    if (N < 0) throw domain_error("taylor_bound_check: order must be >= 0");
    if (r <= 0) throw domain_error("taylor_bound_check: radius must be > 0");
    const int order = spectral::vanishing_order(coeffs, support, N);
    if (order < N)
        throw domain_error("taylor_bound_check: exact vanishing order " +
                           std::to_string(order) + " is below requested " +
                           std::to_string(N));

    const auto u = expoly_from_rational(support, coeffs);
    TaylorCheck tc;
    tc.sup_measured = sup_abs_on_ball(u, r);
    double fact = 1.0;
    for (int k = 2; k <= N + 1; ++k) fact *= k;
    tc.bound = std::pow(r * u.diameter(), N + 1) / fact * u.l1();
    tc.holds = tc.sup_measured <= tc.bound * (1.0 + 1e-9);
    return tc;
}

double upper_bound_eval(std::int64_t count, double diam, int N, double r) {
    if (count < 1) throw domain_error("upper_bound_eval: count must be >= 1");
    if (diam < 0) throw domain_error("upper_bound_eval: diameter must be >= 0");
    if (N < 0) throw domain_error("upper_bound_eval: order must be >= 0");
    if (r <= 0) throw domain_error("upper_bound_eval: radius must be > 0");
    const double e = std::exp(1.0);
    return std::sqrt(static_cast<double>(count)) / std::sqrt(N + 1.0) *
           std::pow(e * r * diam / (N + 1.0), N + 1.0);
}

namespace {

// True when converting the exact coefficients to doubles collapses part of
// the vector (dynamic range beyond ~1e280), so measured quotients describe a
// truncated function.
bool double_conversion_lossy(const std::vector<exact::Rational>& coeffs) {
    exact::Rational maxabs = 0, minabs = 0;
    for (const auto& c : coeffs) {
        if (sgn(c) == 0) continue;
        exact::Rational a = abs(c);
        if (a > maxabs) maxabs = a;
        if (sgn(minabs) == 0 || a < minabs) minabs = a;
    }
    if (sgn(minabs) == 0) return false;
    exact::Rational ratio = minabs / maxabs;
    ratio.canonicalize();
    return ratio.get_d() < 1e-280;
}

// Kernel eigenfunction with the counting-guaranteed vanishing order on the
// given points; N may be capped.  Returns exact coefficients.
std::pair<std::vector<exact::Rational>, std::int64_t> max_vanishing_vector(
    const std::vector<Point>& points, std::int64_t order_cap) {
    const int d = static_cast<int>(points[0].size());
    std::int64_t N = spectral::guaranteed_order(
        d, static_cast<std::int64_t>(points.size()));
    if (order_cap >= 0) N = std::min(N, order_cap);
    if (N < 0)
        throw domain_error("max_vanishing_vector: support too small for any order");
    const auto mm = spectral::moment_matrix(points, static_cast<int>(N), true);
    auto kv = spectral::kernel_vector(mm);
    if (!kv)
        throw std::logic_error("max_vanishing_vector: kernel unexpectedly trivial");
    return {std::move(*kv), N};
}

}  // namespace

FamilyReport family_simple(int d, std::int64_t n_index, double r) {
    if (d < 2) throw domain_error("family_simple: dimension must be >= 2");
    if (n_index < 1) throw domain_error("family_simple: index must be >= 1");
    if (r <= 0 || r >= 1) throw domain_error("family_simple: r must be in (0,1)");

    Point a(static_cast<std::size_t>(d), 0), b(static_cast<std::size_t>(d), 0);
    a[0] = n_index;
    a[1] = n_index + 1;
    b[0] = n_index + 1;
    b[1] = n_index;
    const std::int64_t lam2 = n_index * n_index + (n_index + 1) * (n_index + 1);
    if (norm2(a) != lam2 || norm2(b) != lam2)
        throw std::logic_error("family_simple: frequencies left the sphere");

    FamilyReport fr;
    fr.family = "simple";
    fr.params = {{"d", static_cast<double>(d)},
                 {"n_index", static_cast<double>(n_index)}};
    fr.n = lam2;
    fr.count = 2;
    fr.r = r;
    fr.u = expoly_pair(a, b);
    fr.measured = ball_mass(fr.u, r);  // unit coefficients, torus mean 2
    fr.bound = upper_bound_eval(2, std::sqrt(2.0), 0, r);
    fr.notes = {"measured = mean of |u|^2 over B_r with coefficients (1,-1)",
                "bound is the constant-free vanishing-order evaluator"};
    return fr;
}

FamilyReport family_wigert(std::int64_t m, double r) {
    if (m < 0) throw domain_error("family_wigert: m must be >= 0");
    if (r <= 0) throw domain_error("family_wigert: r must be > 0");
    const auto pp = lattice::primes_one_mod_four(m);
    if (pp.product > exact::BigInt("10000000000"))
        throw domain_error("family_wigert: product exceeds the 1e10 enumeration cap");
    const auto P = static_cast<std::int64_t>(pp.product.get_si());

    const auto sphere = lattice::enumerate_sphere(2, P);
    const std::int64_t expected = 4 * (std::int64_t(1) << pp.omega);
    if (sphere.count() != expected)
        throw std::logic_error("family_wigert: 4*2^omega count mismatch");

    auto [coeffs, N] = max_vanishing_vector(sphere.points, -1);
    const auto u2 = expoly_from_rational(sphere.points, coeffs);

    FamilyReport fr;
    fr.family = "wigert";
    fr.params = {{"m", static_cast<double>(m)},
                 {"omega", static_cast<double>(pp.omega)}};
    fr.n = P;
    fr.count = sphere.count();
    fr.r = r;
    fr.u = expoly_lift(u2, 1);  // eigenfunction on T^3 with lambda^2 = P + 1
    fr.measured = std::max(0.0, rayleigh_quotient(u2, r));
    fr.bound = upper_bound_eval(fr.count, u2.diameter(), static_cast<int>(N), r);
    fr.notes = {"measured = 2-d Rayleigh quotient of the kernel eigenfunction",
                "gamma_lower=" + std::to_string(N),
                "lifted to T^3 by e^{i x_3}"};
    if (double_conversion_lossy(coeffs))
        fr.notes.push_back(
            "coefficient range exceeds double precision; quotient reflects a "
            "truncated vector");
    return fr;
}

FamilyReport family_hyperplane(int d, double K, double r) {
    if (d < 4) throw domain_error("family_hyperplane: dimension must be >= 4");
    if (K < 1) throw domain_error("family_hyperplane: K must be >= 1");
    if (r <= 0 || r >= 1) throw domain_error("family_hyperplane: r must be in (0,1)");

    const double varrho = std::pow(K * r, 2.0 - d);
    const double lo = varrho * varrho;
    const double hi = 4.0 * varrho * varrho;
    if (hi > 4.0e6)
        throw domain_error("family_hyperplane: search window exceeds the desk-scale cap");

    std::int64_t best_n = -1, best_count = 0;
    for (std::int64_t np = static_cast<std::int64_t>(std::floor(lo)) + 1;
         static_cast<double>(np) < hi; ++np) {
        if (np < 1) continue;
        const auto s = lattice::enumerate_sphere(d - 1, np);
        if (s.count() > best_count) {
            best_count = s.count();
            best_n = np;
        }
    }
    if (best_n < 0)
        throw domain_error("family_hyperplane: degenerate search window (no usable n')");

    auto sphere = lattice::enumerate_sphere(d - 1, best_n);
    std::vector<Point> support = sphere.points;
    const std::int64_t points_cap = 256;
    bool capped = false;
    if (static_cast<std::int64_t>(support.size()) > points_cap) {
        // densest-cap subset: nearest points around the first one
        const Point center = support.front();
        std::stable_sort(support.begin(), support.end(),
                         [&center](const Point& x, const Point& y) {
                             return dist2(x, center) < dist2(y, center);
                         });
        support.resize(static_cast<std::size_t>(points_cap));
        std::sort(support.begin(), support.end());
        capped = true;
    }

    auto [coeffs, N] = max_vanishing_vector(support, -1);
    const auto up = expoly_from_rational(support, coeffs);

    FamilyReport fr;
    fr.family = "hyperplane";
    fr.params = {{"d", static_cast<double>(d)},
                 {"K", K},
                 {"varrho", varrho},
                 {"window_lo", lo},
                 {"window_hi", hi}};
    fr.n = best_n;
    fr.count = best_count;
    fr.r = r;
    fr.u = expoly_lift(up, 1);
    fr.measured = std::max(0.0, rayleigh_quotient(up, r));
    fr.bound = upper_bound_eval(static_cast<std::int64_t>(support.size()),
                                up.diameter(), static_cast<int>(N), r);
    fr.notes = {"measured = (d-1)-dimensional Rayleigh quotient",
                "gamma_lower=" + std::to_string(N)};
    if (capped)
        fr.notes.push_back("support restricted to the densest cap of 256 points");
    if (double_conversion_lossy(coeffs))
        fr.notes.push_back(
            "coefficient range exceeds double precision; quotient reflects a "
            "truncated vector");
    return fr;
}

ExponentTables exponent_tables(int d, double r, double gamma, double D) {
    if (d < 3) throw domain_error("exponent_tables: dimension must be >= 3");
    if (r <= 0 || r >= 1) throw domain_error("exponent_tables: r must be in (0,1)");
    if (gamma <= 0 || gamma >= 1)
        throw domain_error("exponent_tables: gamma must be in (0,1)");

    ExponentTables t;

    const double L = std::log(1.0 / r);
    if (std::log(L) > 0) {
        // log-space recursion: ln phi_{j+1} = ((j+1)!/(2 gamma)) (ln phi_j - gamma ln r)
        double lnphi = D * L / std::log(L);
        for (int j = 3; j < d; ++j) {
            double fact = 1.0;
            for (int k = 2; k <= j + 1; ++k) fact *= k;
            lnphi = fact / (2.0 * gamma) * (lnphi + gamma * L);
            if (lnphi > 1e6) break;  // exp() saturates to inf anyway
        }
        t.phi = std::exp(lnphi);
    }

    double h = 0;
    for (int k = 3; k <= d - 1; ++k) {
        double prod = 1.0;
        for (int j = k + 1; j <= d; ++j) {
            double fact = 1.0;
            for (int i = 2; i <= j; ++i) fact *= i;
            prod *= fact;
        }
        h += std::pow(2.0 * gamma, k - d) * prod;
    }
    t.h = gamma * h;

    for (int m = 1; m <= 8; ++m)
        t.delta_cc.emplace_back(m, 1.0 / (4.0 * (m / 2) + 2.0));

    t.nazarov_floor = std::pow(r, 2.0 * d);
    return t;
}

}  // namespace torusobs::obs
