#include "torusobs/clusters.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "torusobs/exact.hpp"

namespace torusobs::clusters {

namespace {

struct DSU {
    std::vector<std::size_t> parent;
    explicit DSU(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

namespace {

template <class Edge>
Partition partition_by(const std::vector<Point>& points, double rho, Edge edge) {
    const std::size_t n = points.size();
    DSU dsu(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge(dist2(points[i], points[j]))) dsu.unite(i, j);

    std::map<std::size_t, std::vector<Point>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[dsu.find(i)].push_back(points[i]);

    Partition p;
    p.rho = rho;
    for (auto& [root, pts] : groups) {
        std::sort(pts.begin(), pts.end());
        p.components.push_back(std::move(pts));
    }
    std::sort(p.components.begin(), p.components.end());
    return p;
}

}  // namespace

Partition partition(const std::vector<Point>& points, double rho) {
    if (rho <= 0) throw domain_error("partition: rho must be > 0");
    const long double rho2 = static_cast<long double>(rho) * rho;
    return partition_by(points, rho, [rho2](std::int64_t d2) {
        return static_cast<long double>(d2) < rho2;
    });
}

// Exact variant for realized-distance thresholds: edges d2 < d2_threshold in
// integer arithmetic, so a pair at exactly the threshold never connects.
Partition partition_strict_d2(const std::vector<Point>& points,
                              std::int64_t d2_threshold) {
    return partition_by(points, std::sqrt(static_cast<double>(d2_threshold)),
                        [d2_threshold](std::int64_t d2) { return d2 < d2_threshold; });
}

namespace {

double cc_delta(int m) { return 1.0 / (4.0 * (m / 2) + 2.0); }

}  // namespace

ArcCheck arc_window_check(std::int64_t n, int m) {
    if (n < 1) throw domain_error("arc_window_check: n must be >= 1");
    if (m < 1) throw domain_error("arc_window_check: m must be >= 1");

    const double lambda = std::sqrt(static_cast<double>(n));
    ArcCheck ac;
    ac.n = n;
    ac.m = m;
    ac.threshold = m == 2 ? std::sqrt(2.0) * std::pow(lambda, 1.0 / 3.0)
                          : std::sqrt(2.0) * std::pow(lambda, 0.5 - cc_delta(m));

    auto sphere = lattice::enumerate_sphere_serial(2, n);
    const std::size_t count = sphere.points.size();
    if (count <= static_cast<std::size_t>(m)) return ac;  // vacuous pass

    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<long double> ang(count);
    for (std::size_t i = 0; i < count; ++i)
        ang[i] = std::atan2(static_cast<long double>(sphere.points[i][1]),
                            static_cast<long double>(sphere.points[i][0]));
    std::sort(order.begin(), order.end(),
              [&ang](std::size_t a, std::size_t b) { return ang[a] < ang[b]; });

    const long double two_pi = 2.0L * std::acos(-1.0L);
    const long double lam = std::sqrt(static_cast<long double>(n));
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = (i + static_cast<std::size_t>(m)) % count;
        long double dth = ang[order[j]] - ang[order[i]];
        if (dth < 0) dth += two_pi;
        const long double arc = lam * dth;
        const long double thr = ac.threshold;
        bool violates = arc < thr;
        if (std::fabs(static_cast<double>(arc - thr)) < 1e-9 * ac.threshold) {
            // guard band: re-decide via exact chord-length arithmetic; the
            // window spans at most a half circle since thr < pi lambda
            const std::int64_t chord2 =
                dist2(sphere.points[order[i]], sphere.points[order[j]]);
            const long double chord_thr = 2.0L * lam * std::sin(thr / (2.0L * lam));
            violates = static_cast<long double>(chord2) < chord_thr * chord_thr &&
                       dth <= two_pi / 2.0L;
        }
        if (violates)
            ac.violations.push_back({n, i, static_cast<double>(arc)});
    }
    return ac;
}

std::vector<ArcCheck> arc_window_sweep_serial(std::int64_t n_lo, std::int64_t n_hi,
                                              int m) {
    if (n_lo < 1 || n_hi < n_lo) throw domain_error("arc_window_sweep: bad range");
    std::vector<ArcCheck> out(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (std::int64_t n = n_lo; n <= n_hi; ++n)
        out[static_cast<std::size_t>(n - n_lo)] = arc_window_check(n, m);
    return out;
}

std::vector<ArcCheck> arc_window_sweep(std::int64_t n_lo, std::int64_t n_hi, int m) {
    if (n_lo < 1 || n_hi < n_lo) throw domain_error("arc_window_sweep: bad range");
    std::vector<ArcCheck> out(static_cast<std::size_t>(n_hi - n_lo + 1));
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_cap())
    for (std::int64_t n = n_lo; n <= n_hi; ++n)
        out[static_cast<std::size_t>(n - n_lo)] = arc_window_check(n, m);
    return out;
}

bool is_affine_hyperplane(const std::vector<Point>& points) {
    if (points.size() <= 2) return true;
    const int d = static_cast<int>(points[0].size());
    return exact::affine_rank(points) <= d - 1;
}

double connes_threshold(const lattice::SphereSet& sphere) {
    if (sphere.d < 3) throw domain_error("connes_threshold: dimension must be >= 3");
    if (sphere.points.empty())
        throw domain_error("connes_threshold: empty sphere set");

    if (is_affine_hyperplane(sphere.points))
        return std::numeric_limits<double>::infinity();

    std::vector<std::int64_t> d2s;
    const auto& pts = sphere.points;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            d2s.push_back(dist2(pts[i], pts[j]));
    std::sort(d2s.begin(), d2s.end());
    d2s.erase(std::unique(d2s.begin(), d2s.end()), d2s.end());

    double best = 0;
    for (std::int64_t d2 : d2s) {
        const double rho = std::sqrt(static_cast<double>(d2));
        const auto part = partition_strict_d2(pts, d2);
        bool ok = true;
        for (const auto& comp : part.components)
            if (!is_affine_hyperplane(comp)) {
                ok = false;
                break;
            }
        if (!ok) break;
        best = rho;
    }
    return best;
}

double CutoffSpec::fhat(const std::vector<double>& xi) const {
    double v = 1.0;
    for (double c : xi) {
        const double t = sigma * c / 8.0;
        const double s = t == 0.0 ? 1.0 : std::sin(t) / t;
        v *= s * s * s * s;
    }
    return v;
}

double CutoffSpec::envelope(int d, double t) const {
    if (t <= 0) return 1.0;
    const double base = 8.0 * std::sqrt(static_cast<double>(d)) / (sigma * t);
    return std::min(1.0, base * base * base * base);
}

double CutoffSpec::spatial(const std::vector<double>& x) const {
    // per axis: cardinal cubic B-spline scaled to support [-sigma/2, sigma/2]
    const double a = sigma / 8.0;
    double v = 1.0;
    for (double c : x) {
        const double t = std::fabs(c) / (2.0 * a);
        double b;
        if (t <= 1.0)
            b = 2.0 / 3.0 - t * t + t * t * t / 2.0;
        else if (t <= 2.0)
            b = (2.0 - t) * (2.0 - t) * (2.0 - t) / 6.0;
        else
            b = 0.0;
        v *= b / (2.0 * a);
    }
    return v;
}

void CutoffSpec::validate(int d) const {
    if (sigma <= 0) throw domain_error("cutoff: sigma must be > 0");
    if (d < 1 || d > 4)
        throw domain_error("cutoff: cube support fits B_sigma only for d <= 4");
}

DecompositionGap decomposition_gap(const ExponentialPolynomial& u, double rho,
                                   double r, const CutoffSpec& cutoff) {
    if (rho <= 0) throw domain_error("decomposition_gap: rho must be > 0");
    if (r <= 0) throw domain_error("decomposition_gap: r must be > 0");
    cutoff.validate(u.d);
    if (u.terms() == 0) throw domain_error("decomposition_gap: zero function");

    const auto part = partition(u.freqs, rho);
    std::map<Point, std::size_t> comp_of;
    for (std::size_t c = 0; c < part.components.size(); ++c)
        for (const auto& p : part.components[c]) comp_of[p] = c;

    std::complex<double> cross = 0;
    std::vector<double> xi(static_cast<std::size_t>(u.d));
    for (std::size_t i = 0; i < u.terms(); ++i) {
        for (std::size_t j = 0; j < u.terms(); ++j) {
            if (i == j) continue;
            if (comp_of.at(u.freqs[i]) == comp_of.at(u.freqs[j])) continue;
            for (int c = 0; c < u.d; ++c)
                xi[static_cast<std::size_t>(c)] =
                    r * static_cast<double>(u.freqs[i][static_cast<std::size_t>(c)] -
                                            u.freqs[j][static_cast<std::size_t>(c)]);
            cross += u.coeffs[i] * std::conj(u.coeffs[j]) * cutoff.fhat(xi);
        }
    }

    DecompositionGap g;
    g.lhs_gap = std::abs(cross);
    g.rhs_bound = 0.5 * static_cast<double>(u.terms()) *
                  cutoff.envelope(u.d, r * rho) * u.norm2();
    g.holds = g.lhs_gap <= g.rhs_bound * (1.0 + 1e-9);
    return g;
}

}  // namespace torusobs::clusters
