#include "torusobs/spectral.hpp"

#include <algorithm>

#include "torusobs/lattice.hpp"

namespace torusobs::spectral {

namespace {

void gen_degree(int d, int deg, int coord, std::vector<int>& alpha,
                std::vector<MultiIndex>& out) {
    if (coord == d - 1) {
        alpha[static_cast<std::size_t>(coord)] = deg;
        out.push_back({alpha, 0});
        return;
    }
    for (int a = 0; a <= deg; ++a) {
        alpha[static_cast<std::size_t>(coord)] = a;
        gen_degree(d, deg - a, coord + 1, alpha, out);
    }
}

}  // namespace

std::vector<MultiIndex> multi_indices(int d, int N, bool reduced) {
    std::vector<MultiIndex> all;
    std::vector<int> alpha(static_cast<std::size_t>(d), 0);
    for (int deg = 0; deg <= N; ++deg) gen_degree(d, deg, 0, alpha, all);
    for (auto& mi : all) {
        mi.degree = 0;
        for (int a : mi.alpha) mi.degree += a;
    }
    if (!reduced) return all;
    std::vector<MultiIndex> rows;
    for (int last = 0; last <= 1; ++last)
        for (const auto& mi : all)
            if (mi.alpha.back() == last) rows.push_back(mi);
    return rows;
}

MomentMatrix moment_matrix(const std::vector<Point>& points, int N, bool reduced) {
    if (points.empty()) throw domain_error("moment_matrix: empty point set");
    const std::size_t d = points[0].size();
    for (const auto& p : points)
        if (p.size() != d) throw domain_error("moment_matrix: mixed dimensions");

    MomentMatrix m;
    m.reduced = reduced;
    m.degree_cap = N;
    m.rows = multi_indices(static_cast<int>(d), N, reduced);
    m.cols = points;
    m.entries = exact::IntMatrix(m.rows.size(), m.cols.size());
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        const auto& alpha = m.rows[i].alpha;
        for (std::size_t j = 0; j < m.cols.size(); ++j) {
            exact::BigInt v = 1;
            for (std::size_t c = 0; c < d; ++c) {
                exact::BigInt base(static_cast<long>(points[j][c]));
                exact::BigInt pw;
                mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(),
                           static_cast<unsigned long>(alpha[c]));
                v *= pw;
            }
            m.entries.at(i, j) = v;
        }
    }
    return m;
}

int exact_rank(const MomentMatrix& m) { return exact::rank(m.entries); }

std::optional<RationalVector> kernel_vector(const MomentMatrix& m) {
    return exact::kernel_vector(m.entries);
}

int vanishing_order(const RationalVector& coeffs, const std::vector<Point>& points,
                    int N_max) {
    if (coeffs.size() != points.size())
        throw domain_error("vanishing_order: coefficient/point count mismatch");
    if (points.empty()) throw domain_error("vanishing_order: empty support");
    const int d = static_cast<int>(points[0].size());
    for (int N = 0; N <= N_max; ++N) {
        for (const auto& mi : multi_indices(d, N, false)) {
            if (mi.degree != N) continue;  // lower degrees checked already
            exact::Rational s = 0;
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (sgn(coeffs[j]) == 0) continue;
                exact::BigInt v = 1;
                for (int c = 0; c < d; ++c) {
                    exact::BigInt base(static_cast<long>(points[j][static_cast<std::size_t>(c)]));
                    exact::BigInt pw;
                    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(),
                               static_cast<unsigned long>(mi.alpha[static_cast<std::size_t>(c)]));
                    v *= pw;
                }
                s += coeffs[j] * exact::Rational(v);
            }
            if (sgn(s) != 0) return N - 1;
        }
    }
    return N_max;
}

exact::BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    exact::BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

std::int64_t guaranteed_order(int d, std::int64_t count) {
    std::int64_t best = -1;
    for (std::int64_t N = 0;; ++N) {
        const exact::BigInt rows =
            binomial(N + d - 1, d - 1) + binomial(N + d - 2, d - 1);
        if (rows < count)
            best = N;
        else
            break;
    }
    return best;
}

int gamma_max(int d, std::int64_t n, int N_max) {
    const auto sphere = lattice::enumerate_sphere(d, n);
    if (sphere.points.empty())
        throw domain_error("gamma_max: empty eigenspace");
    const auto cols = static_cast<int>(sphere.points.size());
    int gamma = -1;
    for (int N = 0; N <= N_max; ++N) {
        const auto full = moment_matrix(sphere.points, N, false);
        const bool full_kernel = exact_rank(full) < cols;
        const auto red = moment_matrix(sphere.points, N, true);
        const bool red_kernel = exact_rank(red) < cols;
        if (full_kernel != red_kernel)
            throw std::logic_error("gamma_max: full/reduced criteria disagree");
        if (!full_kernel) break;
        gamma = N;
    }
    return gamma;
}

GammaBounds gamma_bounds(int d, std::int64_t n, double C_arith) {
    const auto sphere = lattice::enumerate_sphere(d, n);
    const std::int64_t count = sphere.count();
    if (count == 0) throw domain_error("gamma_bounds: empty eigenspace");

    GammaBounds gb;
    gb.lower = guaranteed_order(d, count);

    const double lambda = std::sqrt(static_cast<double>(n));
    const double m_val =
        std::min(static_cast<double>(count - 1), 2.0 * d * lambda);
    gb.upper_M = static_cast<std::int64_t>(std::floor(m_val)) - 1;

    if (d == 2) {
        gb.upper_D = static_cast<double>(count - 2);
    } else if (lambda > std::exp(1.0)) {
        gb.upper_D = 2.0 * (d - 2) * lambda +
                     std::exp(C_arith * std::log(lambda) / std::log(std::log(lambda))) -
                     1.0;
    }
    return gb;
}

}  // namespace torusobs::spectral
