#include "torusobs/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace torusobs {

namespace {
int g_thread_cap = 0;
}

int thread_cap() {
    if (g_thread_cap > 0) return g_thread_cap;
    if (const char* env = std::getenv("TORUS_OBS_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_thread_cap(int n) { g_thread_cap = n > 0 ? n : 0; }

}  // namespace torusobs

namespace torusobs::lattice {

namespace {

// Appends, in lexicographic order, all points with the given prefix and
// remaining squared norm.
void extend(Point& prefix, int coords_left, std::int64_t remaining,
            std::vector<Point>& out) {
    if (coords_left == 1) {
        std::int64_t s;
        if (!is_perfect_square(remaining, s)) return;
        if (s > 0) {
            prefix.push_back(-s);
            out.push_back(prefix);
            prefix.back() = s;
            out.push_back(prefix);
            prefix.pop_back();
        } else {
            prefix.push_back(0);
            out.push_back(prefix);
            prefix.pop_back();
        }
        return;
    }
    const std::int64_t bound = isqrt(remaining);
    for (std::int64_t c = -bound; c <= bound; ++c) {
        prefix.push_back(c);
        extend(prefix, coords_left - 1, remaining - c * c, out);
        prefix.pop_back();
    }
}

void check_sphere_args(int d, std::int64_t n) {
    if (d < 2) throw domain_error("enumerate_sphere: dimension must be >= 2");
    if (n < 0) throw domain_error("enumerate_sphere: squared radius must be >= 0");
}

}  // namespace

SphereSet enumerate_sphere_serial(int d, std::int64_t n) {
    check_sphere_args(d, n);
    SphereSet s;
    s.d = d;
    s.n = n;
    Point prefix;
    prefix.reserve(d);
    extend(prefix, d, n, s.points);
    return s;
}

SphereSet enumerate_sphere(int d, std::int64_t n) {
    check_sphere_args(d, n);
    const std::int64_t bound = isqrt(n);
    const std::int64_t span = 2 * bound + 1;
    const std::int64_t blocks =
        std::min<std::int64_t>(span, 8LL * thread_cap());
    if (blocks < 2) return enumerate_sphere_serial(d, n);

    // contiguous first-coordinate blocks keep the concatenation in
    // lexicographic order
    SphereSet s;
    s.d = d;
    s.n = n;
    std::vector<std::vector<Point>> chunks(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(dynamic) num_threads(thread_cap())
    for (std::int64_t blk = 0; blk < blocks; ++blk) {
        const std::int64_t lo = -bound + span * blk / blocks;
        const std::int64_t hi = -bound + span * (blk + 1) / blocks;
        auto& out = chunks[static_cast<std::size_t>(blk)];
        for (std::int64_t c = lo; c < hi; ++c) {
            Point prefix{c};
            prefix.reserve(d);
            extend(prefix, d - 1, n - c * c, out);
        }
    }
    std::size_t total = 0;
    for (const auto& chunk : chunks) total += chunk.size();
    s.points.reserve(total);
    for (auto& chunk : chunks)
        s.points.insert(s.points.end(),
                        std::make_move_iterator(chunk.begin()),
                        std::make_move_iterator(chunk.end()));
    return s;
}

std::int64_t r2_via_divisors(std::int64_t n) {
    if (n <= 0) throw domain_error("r2_via_divisors: n must be >= 1");
    std::int64_t d1 = 0, d3 = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        const std::int64_t q = n / d;
        if (d % 4 == 1) ++d1;
        if (d % 4 == 3) ++d3;
        if (q != d) {
            if (q % 4 == 1) ++d1;
            if (q % 4 == 3) ++d3;
        }
    }
    return 4 * (d1 - d3);
}

bool is_three_square_excluded(std::int64_t n) {
    if (n < 0) throw domain_error("is_three_square_excluded: n must be >= 0");
    if (n == 0) return false;
    while (n % 4 == 0) n /= 4;
    return n % 8 == 7;
}

namespace {

// Max subset with all pairwise squared distances <= limit2: branch and bound
// over the compatibility graph, vertices in canonical order.
void clique_extend(const std::vector<std::vector<char>>& adj,
                   std::vector<int>& candidates, int current, int& best) {
    if (current + static_cast<int>(candidates.size()) <= best) return;
    if (candidates.empty()) {
        best = std::max(best, current);
        return;
    }
    while (!candidates.empty()) {
        if (current + static_cast<int>(candidates.size()) <= best) return;
        const int v = candidates.front();
        candidates.erase(candidates.begin());
        std::vector<int> next;
        for (int u : candidates)
            if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) next.push_back(u);
        clique_extend(adj, next, current + 1, best);
        best = std::max(best, current + 1);
    }
}

}  // namespace

CapStatistics cap_statistics(const SphereSet& sphere, double R,
                             std::int64_t exact_limit) {
    if (R <= 0) throw domain_error("cap_statistics: R must be > 0");
    if (sphere.points.empty())
        throw domain_error("cap_statistics: empty sphere set");

    const auto& pts = sphere.points;
    const std::size_t n = pts.size();

    CapStatistics cs;
    cs.R = R;

    const double R2 = R * R;
    const double diam2 = 4.0 * R2;

    std::int64_t best_lower = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t c = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (static_cast<double>(dist2(pts[i], pts[j])) <= R2) ++c;
        best_lower = std::max(best_lower, c);
    }
    cs.count_lower = best_lower;

    if (static_cast<std::int64_t>(n) <= exact_limit) {
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                adj[i][j] = static_cast<double>(dist2(pts[i], pts[j])) <= diam2;
        int best = static_cast<int>(best_lower);
        std::vector<int> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
        clique_extend(adj, all, 0, best);
        cs.count_exact = best;
    }

    const auto count = cs.count_exact ? *cs.count_exact : cs.count_lower;
    const int d = sphere.d;
    cs.density = std::pow(static_cast<double>(count), 1.0 / (d - 1)) / R;
    return cs;
}

PrimeProduct primes_one_mod_four(std::int64_t m) {
    if (m < 0) throw domain_error("primes_one_mod_four: m must be >= 0");
    PrimeProduct pp;
    pp.m = m;
    pp.product = 1;
    if (m >= 2) {
        std::vector<char> composite(static_cast<std::size_t>(m) + 1, 0);
        for (std::int64_t p = 2; p <= m; ++p) {
            if (composite[static_cast<std::size_t>(p)]) continue;
            if (p % 4 == 1) {
                pp.primes.push_back(p);
                pp.product *= static_cast<unsigned long>(p);
            }
            for (std::int64_t q = p * p; q <= m; q += p)
                composite[static_cast<std::size_t>(q)] = 1;
        }
    }
    pp.omega = static_cast<int>(pp.primes.size());
    return pp;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n <= 0) throw domain_error("factorize: n must be >= 1");
    std::vector<std::pair<std::int64_t, int>> f;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

}  // namespace torusobs::lattice
