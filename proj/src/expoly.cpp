#include "torusobs/expoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace torusobs {

ExponentialPolynomial expoly_pair(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw domain_error("expoly_pair: mixed dimensions");
    ExponentialPolynomial u;
    u.d = static_cast<int>(a.size());
    u.freqs = {a, b};
    u.coeffs = {{1.0, 0.0}, {-1.0, 0.0}};
    return u;
}

ExponentialPolynomial expoly_from_rational(const std::vector<Point>& points,
                                           const std::vector<exact::Rational>& coeffs) {
    if (points.size() != coeffs.size())
        throw domain_error("expoly_from_rational: size mismatch");
    exact::Rational maxabs = 0;
    for (const auto& c : coeffs) {
        exact::Rational a = abs(c);
        if (a > maxabs) maxabs = a;
    }
    if (sgn(maxabs) == 0) throw domain_error("expoly_from_rational: zero vector");

    // Keep the caller's scale unless it would leave the double range, as the
    // entries of high-order kernel vectors can.
    const double approx = maxabs.get_d();
    const bool rescale = !(approx > 1e-300 && approx < 1e300);

    ExponentialPolynomial u;
    u.d = static_cast<int>(points[0].size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (sgn(coeffs[i]) == 0) continue;
        exact::Rational v = coeffs[i];
        if (rescale) {
            v /= maxabs;
            v.canonicalize();
        }
        u.freqs.push_back(points[i]);
        u.coeffs.emplace_back(v.get_d(), 0.0);
    }
    return u;
}

ExponentialPolynomial expoly_one_minus_cos_power(int n) {
    if (n < 0) throw domain_error("expoly_one_minus_cos_power: n must be >= 0");
    // coefficients over e^{imx}, m = -n..n; start from 1 and multiply by
    // (1 - e^{ix}/2 - e^{-ix}/2)
    std::map<std::int64_t, double> c{{0, 1.0}};
    for (int it = 0; it < n; ++it) {
        std::map<std::int64_t, double> next;
        for (const auto& [m, v] : c) {
            next[m] += v;
            next[m + 1] += -0.5 * v;
            next[m - 1] += -0.5 * v;
        }
        c = std::move(next);
    }
    ExponentialPolynomial u;
    u.d = 1;
    for (const auto& [m, v] : c) {
        if (v == 0.0) continue;
        u.freqs.push_back({m});
        u.coeffs.emplace_back(v, 0.0);
    }
    return u;
}

ExponentialPolynomial expoly_product(const std::vector<ExponentialPolynomial>& axes) {
    for (const auto& a : axes)
        if (a.d != 1) throw domain_error("expoly_product: factors must be 1-d");
    ExponentialPolynomial u;
    u.d = static_cast<int>(axes.size());
    u.freqs = {Point(axes.size(), 0)};
    u.coeffs = {{1.0, 0.0}};
    for (std::size_t ax = 0; ax < axes.size(); ++ax) {
        ExponentialPolynomial next;
        next.d = u.d;
        for (std::size_t i = 0; i < u.freqs.size(); ++i) {
            for (std::size_t j = 0; j < axes[ax].freqs.size(); ++j) {
                Point k = u.freqs[i];
                k[ax] = axes[ax].freqs[j][0];
                next.freqs.push_back(std::move(k));
                next.coeffs.push_back(u.coeffs[i] * axes[ax].coeffs[j]);
            }
        }
        u = std::move(next);
    }
    return u;
}

ExponentialPolynomial expoly_lift(const ExponentialPolynomial& u, std::int64_t m) {
    ExponentialPolynomial v;
    v.d = u.d + 1;
    v.coeffs = u.coeffs;
    for (const auto& k : u.freqs) {
        Point kk = k;
        kk.push_back(m);
        v.freqs.push_back(std::move(kk));
    }
    return v;
}

}  // namespace torusobs
