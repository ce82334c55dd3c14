#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "torusobs/clusters.hpp"

using namespace torusobs;
using namespace torusobs::clusters;

TEST_CASE("partition of S_2(25)") {
    const auto s = lattice::enumerate_sphere(2, 25);

    const auto p1 = partition(s.points, 1.0);
    CHECK(p1.components.size() == 12);  // min distance sqrt 2

    const auto p15 = partition(s.points, 1.5);
    CHECK(p15.components.size() == 8);  // four same-quadrant pairs + 4 axes
    int pairs = 0, singles = 0;
    for (const auto& c : p15.components) {
        if (c.size() == 2) ++pairs;
        if (c.size() == 1) ++singles;
    }
    CHECK(pairs == 4);
    CHECK(singles == 4);

    const auto pbig = partition(s.points, 100.0);
    CHECK(pbig.components.size() == 1);

    CHECK_THROWS_AS(partition(s.points, 0.0), domain_error);
}

TEST_CASE("partition edges are strict") {
    // distance sqrt(2) pairs must NOT connect at threshold sqrt(2) exactly
    const std::vector<Point> pts{{0, 0}, {1, 1}};
    CHECK(partition_strict_d2(pts, 2).components.size() == 2);
    CHECK(partition_strict_d2(pts, 3).components.size() == 1);
}

TEST_CASE("refinement and edge soundness") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> coord(-6, 6);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Point> pts;
        while (pts.size() < 30) {
            Point p{coord(rng), coord(rng), coord(rng)};
            if (std::find(pts.begin(), pts.end(), p) == pts.end())
                pts.push_back(std::move(p));
        }
        std::sort(pts.begin(), pts.end());

        const double rho_small = 2.0, rho_big = 3.5;
        const auto fine = partition(pts, rho_small);
        const auto coarse = partition(pts, rho_big);

        // refinement: every fine component is inside one coarse component
        for (const auto& fc : fine.components) {
            int containers = 0;
            for (const auto& cc : coarse.components) {
                bool all = true;
                for (const auto& p : fc)
                    if (std::find(cc.begin(), cc.end(), p) == cc.end()) all = false;
                if (all) ++containers;
            }
            CHECK(containers == 1);
        }

        // cross-component pairs are >= rho apart, components are connected
        for (const auto& part : {fine, coarse}) {
            const double rho = part.rho;
            for (std::size_t a = 0; a < part.components.size(); ++a)
                for (std::size_t b = a + 1; b < part.components.size(); ++b)
                    for (const auto& p : part.components[a])
                        for (const auto& q : part.components[b])
                            CHECK(static_cast<double>(dist2(p, q)) >= rho * rho);
            for (const auto& comp : part.components) {
                // BFS connectivity within the component
                std::vector<char> seen(comp.size(), 0);
                std::vector<std::size_t> stack{0};
                seen[0] = 1;
                while (!stack.empty()) {
                    const auto i = stack.back();
                    stack.pop_back();
                    for (std::size_t j = 0; j < comp.size(); ++j)
                        if (!seen[j] &&
                            static_cast<double>(dist2(comp[i], comp[j])) < rho * rho) {
                            seen[j] = 1;
                            stack.push_back(j);
                        }
                }
                CHECK(std::count(seen.begin(), seen.end(), 1) ==
                      static_cast<std::ptrdiff_t>(comp.size()));
            }
        }
    }
}

TEST_CASE("arc window checks") {
    const auto a25 = arc_window_check(25, 2);
    CHECK(a25.threshold == doctest::Approx(2.4182711751219573).epsilon(1e-12));
    CHECK(a25.violations.empty());

    CHECK(arc_window_check(3, 2).violations.empty());  // empty sphere

    const auto a1105 = arc_window_check(1105, 2);
    CHECK(a1105.violations.empty());

    CHECK_THROWS_AS(arc_window_check(0, 2), domain_error);
}

TEST_CASE("arc window sweeps: parallel equals serial") {
    const auto par = arc_window_sweep(1, 300, 2);
    const auto ser = arc_window_sweep_serial(1, 300, 2);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].n == ser[i].n);
        CHECK(par[i].violations.size() == ser[i].violations.size());
        CHECK(par[i].violations.empty());
    }
    for (int m : {3, 4}) {
        for (const auto& c : arc_window_sweep(1, 300, m))
            CHECK(c.violations.empty());
    }
}

TEST_CASE("affine hyperplane detection") {
    CHECK(is_affine_hyperplane({{3, 4}, {4, 3}}));
    CHECK_FALSE(is_affine_hyperplane({{5, 0}, {0, 5}, {-5, 0}, {0, -5}}));
    CHECK(is_affine_hyperplane({{1, 2, 3}, {4, 5, 6}}));
    CHECK(is_affine_hyperplane({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
    CHECK_FALSE(
        is_affine_hyperplane({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("affine hyperplane agrees with a floating rank oracle") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> coord(-9, 9);
    std::uniform_int_distribution<int> count(1, 7);
    for (int trial = 0; trial < 500; ++trial) {
        const int d = 2 + trial % 3;
        std::vector<Point> pts;
        const int k = count(rng);
        for (int i = 0; i < k; ++i) {
            Point p(static_cast<std::size_t>(d));
            for (auto& c : p) c = coord(rng);
            pts.push_back(std::move(p));
        }

        // Gram-Schmidt rank of {p - p0} with tolerance 1e-8
        std::vector<std::vector<double>> basis;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            std::vector<double> v(static_cast<std::size_t>(d));
            for (int c = 0; c < d; ++c)
                v[static_cast<std::size_t>(c)] = static_cast<double>(
                    pts[i][static_cast<std::size_t>(c)] - pts[0][static_cast<std::size_t>(c)]);
            for (const auto& b : basis) {
                double dot = 0, nn = 0;
                for (int c = 0; c < d; ++c) {
                    dot += v[static_cast<std::size_t>(c)] * b[static_cast<std::size_t>(c)];
                    nn += b[static_cast<std::size_t>(c)] * b[static_cast<std::size_t>(c)];
                }
                for (int c = 0; c < d; ++c)
                    v[static_cast<std::size_t>(c)] -= dot / nn * b[static_cast<std::size_t>(c)];
            }
            double norm = 0;
            for (double x : v) norm += x * x;
            if (std::sqrt(norm) > 1e-8) basis.push_back(v);
        }
        CHECK(is_affine_hyperplane(pts) ==
              (static_cast<int>(basis.size()) <= d - 1));
    }
}

TEST_CASE("connes threshold") {
    CHECK(connes_threshold(lattice::enumerate_sphere(3, 1)) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    // degenerate single-point sphere
    CHECK(std::isinf(connes_threshold(lattice::enumerate_sphere(3, 0))));

    // S_4(4): 24 points; singletons pass at distance 2, the distance-2 graph
    // is connected and spans rank 4
    CHECK(connes_threshold(lattice::enumerate_sphere(4, 4)) ==
          doctest::Approx(2.0).epsilon(1e-15));

    CHECK_THROWS_AS(connes_threshold(lattice::enumerate_sphere(2, 25)),
                    domain_error);
}

TEST_CASE("cutoff spec") {
    CutoffSpec cut;
    cut.validate(2);
    CHECK_THROWS_AS(cut.validate(5), domain_error);

    CHECK(cut.fhat({0.0, 0.0}) == 1.0);

    // envelope dominates |chihat| on a grid of directions and radii
    const double dirs[4][2] = {{1, 0}, {0, 1}, {0.6, 0.8}, {-0.707, 0.707}};
    for (const auto& dir : dirs)
        for (double t = 0.05; t < 120.0; t *= 1.31) {
            const double v = std::fabs(cut.fhat({t * dir[0], t * dir[1]}));
            CHECK(v <= cut.envelope(2, t) * (1.0 + 1e-12));
        }

    // chi is nonnegative with positive center value, supported in B_sigma
    CHECK(cut.spatial({0.0, 0.0}) > 0.0);
    for (double x = -0.8; x <= 0.8; x += 0.05)
        for (double y = -0.8; y <= 0.8; y += 0.05) {
            CHECK(cut.spatial({x, y}) >= 0.0);
            if (x * x + y * y > cut.sigma * cut.sigma)
                CHECK(cut.spatial({x, y}) == 0.0);
        }
}

TEST_CASE("decomposition gap") {
    CutoffSpec cut;

    // support within one component: zero gap
    ExponentialPolynomial u;
    u.d = 2;
    u.freqs = {{3, 4}, {4, 3}};
    u.coeffs = {{1, 0}, {1, 0}};
    auto g = decomposition_gap(u, 100.0, 0.1, cut);
    CHECK(g.lhs_gap == 0.0);
    CHECK(g.holds);

    // single exponential
    ExponentialPolynomial single;
    single.d = 2;
    single.freqs = {{3, 4}};
    single.coeffs = {{1, 0}};
    g = decomposition_gap(single, 1.5, 0.1, cut);
    CHECK(g.lhs_gap == 0.0);

    // full test matrix with random sign coefficients
    std::mt19937_64 rng(2024);
    for (std::int64_t n : {25, 325, 1105}) {
        const auto s = lattice::enumerate_sphere(2, n);
        for (double rho : {1.5, 5.0}) {
            for (double r : {0.1, 0.3}) {
                for (int trial = 0; trial < 5; ++trial) {
                    ExponentialPolynomial f;
                    f.d = 2;
                    f.freqs = s.points;
                    for (std::size_t i = 0; i < s.points.size(); ++i)
                        f.coeffs.emplace_back(rng() % 2 ? 1.0 : -1.0, 0.0);
                    const auto gap = decomposition_gap(f, rho, r, cut);
                    CHECK(gap.holds);
                }
            }
        }
    }
}
