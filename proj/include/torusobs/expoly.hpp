#pragma once

#include <complex>
#include <vector>

#include "torusobs/exact.hpp"
#include "torusobs/types.hpp"

namespace torusobs {

// Finite exponential polynomial u(x) = sum_k c_k e^{i k.x}, integer
// frequencies.  The torus mean of |u|^2 is norm2() by Parseval.
struct ExponentialPolynomial {
    int d = 0;
    std::vector<Point> freqs;
    std::vector<std::complex<double>> coeffs;

    std::complex<double> eval(const double* x) const {
        std::complex<double> s = 0;
        for (std::size_t i = 0; i < freqs.size(); ++i) {
            double phase = 0;
            for (int c = 0; c < d; ++c)
                phase += static_cast<double>(freqs[i][static_cast<std::size_t>(c)]) *
                         x[c];
            s += coeffs[i] * std::polar(1.0, phase);
        }
        return s;
    }

    double abs2(const double* x) const { return std::norm(eval(x)); }

    double norm2() const {
        double s = 0;
        for (const auto& c : coeffs) s += std::norm(c);
        return s;
    }

    double l1() const {
        double s = 0;
        for (const auto& c : coeffs) s += std::abs(c);
        return s;
    }

    double diameter() const {
        std::int64_t best = 0;
        for (std::size_t i = 0; i < freqs.size(); ++i)
            for (std::size_t j = i + 1; j < freqs.size(); ++j)
                best = std::max(best, dist2(freqs[i], freqs[j]));
        return std::sqrt(static_cast<double>(best));
    }

    std::int64_t max_freq_norm2() const {
        std::int64_t best = 0;
        for (const auto& k : freqs) best = std::max(best, norm2_of(k));
        return best;
    }

    std::size_t terms() const { return freqs.size(); }

private:
    static std::int64_t norm2_of(const Point& p) { return torusobs::norm2(p); }
};

// e^{i a.x} - e^{i b.x}
ExponentialPolynomial expoly_pair(const Point& a, const Point& b);

// Doubles from an exact coefficient vector, scaled by the largest magnitude
// so every coefficient fits the double range.  Zero entries are dropped.
ExponentialPolynomial expoly_from_rational(const std::vector<Point>& points,
                                           const std::vector<exact::Rational>& coeffs);

// (1 - cos x)^n on the 1-torus, exact dyadic coefficients.
ExponentialPolynomial expoly_one_minus_cos_power(int n);

// Separable product of 1-d factors on the d-torus.
ExponentialPolynomial expoly_product(const std::vector<ExponentialPolynomial>& axes);

// u(x', x_d) = e^{i m x_d} u'(x'): raises the ambient dimension by one.
ExponentialPolynomial expoly_lift(const ExponentialPolynomial& u, std::int64_t m);

}  // namespace torusobs
