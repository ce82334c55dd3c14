#include "torusobs/turan.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace torusobs::turan {

SetDescriptor SetDescriptor::interval(double a, double b) {
    if (!(a < b)) throw domain_error("set descriptor: need a < b");
    SetDescriptor s;
    s.kind = Kind::interval;
    s.d = 1;
    s.a = a;
    s.b = b;
    return s;
}

SetDescriptor SetDescriptor::ball(std::vector<double> center, double radius) {
    if (radius <= 0) throw domain_error("set descriptor: radius must be > 0");
    SetDescriptor s;
    s.kind = Kind::ball;
    s.d = static_cast<int>(center.size());
    s.center = std::move(center);
    s.radius = radius;
    return s;
}

SetDescriptor SetDescriptor::box(std::vector<double> lo, std::vector<double> hi) {
    if (lo.size() != hi.size() || lo.empty())
        throw domain_error("set descriptor: box bound mismatch");
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (!(lo[i] < hi[i])) throw domain_error("set descriptor: need lo < hi");
    SetDescriptor s;
    s.kind = Kind::box;
    s.d = static_cast<int>(lo.size());
    s.lo = std::move(lo);
    s.hi = std::move(hi);
    return s;
}

SetDescriptor SetDescriptor::torus(int d) {
    SetDescriptor s;
    s.kind = Kind::torus;
    s.d = d;
    return s;
}

std::string SetDescriptor::describe() const {
    switch (kind) {
        case Kind::interval:
            return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
        case Kind::ball:
            return "ball(r=" + std::to_string(radius) + ",d=" + std::to_string(d) + ")";
        case Kind::box:
            return "box(d=" + std::to_string(d) + ")";
        default:
            return "T^" + std::to_string(d);
    }
}

namespace {

// |f(x)| in 160-bit arithmetic.  The double evaluator loses
// eps * ||c||_1 absolutely, which drowns maxima of strongly vanishing
// functions on small sets; the refinement stage therefore re-evaluates in
// extended precision.
class HighPrecAbs {
public:
    explicit HighPrecAbs(const ExponentialPolynomial& f) : f_(f) {
        mpfr_inits2(160, x_, kx_, s_, c_, re_, im_, t_, (mpfr_ptr) nullptr);
    }
    ~HighPrecAbs() {
        mpfr_clears(x_, kx_, s_, c_, re_, im_, t_, (mpfr_ptr) nullptr);
    }
    HighPrecAbs(const HighPrecAbs&) = delete;
    HighPrecAbs& operator=(const HighPrecAbs&) = delete;

    double operator()(double x) const {
        mpfr_set_d(x_, x, MPFR_RNDN);
        mpfr_set_zero(re_, 1);
        mpfr_set_zero(im_, 1);
        for (std::size_t i = 0; i < f_.terms(); ++i) {
            mpfr_mul_si(kx_, x_, static_cast<long>(f_.freqs[i][0]), MPFR_RNDN);
            mpfr_sin_cos(s_, c_, kx_, MPFR_RNDN);
            // re += a cos - b sin ; im += a sin + b cos
            const double a = f_.coeffs[i].real(), b = f_.coeffs[i].imag();
            mpfr_mul_d(t_, c_, a, MPFR_RNDN);
            mpfr_add(re_, re_, t_, MPFR_RNDN);
            mpfr_mul_d(t_, s_, b, MPFR_RNDN);
            mpfr_sub(re_, re_, t_, MPFR_RNDN);
            mpfr_mul_d(t_, s_, a, MPFR_RNDN);
            mpfr_add(im_, im_, t_, MPFR_RNDN);
            mpfr_mul_d(t_, c_, b, MPFR_RNDN);
            mpfr_add(im_, im_, t_, MPFR_RNDN);
        }
        mpfr_mul(re_, re_, re_, MPFR_RNDN);
        mpfr_mul(im_, im_, im_, MPFR_RNDN);
        mpfr_add(re_, re_, im_, MPFR_RNDN);
        mpfr_sqrt(re_, re_, MPFR_RNDN);
        return mpfr_get_d(re_, MPFR_RNDN);
    }

private:
    const ExponentialPolynomial& f_;
    mutable mpfr_t x_, kx_, s_, c_, re_, im_, t_;
};

double golden_refine_1d(const HighPrecAbs& eval, double lo, double hi) {
    // golden-section maximization of |f| on [lo, hi]
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - phi * (hi - lo);
    double x2 = lo + phi * (hi - lo);
    double f1 = eval(x1);
    double f2 = eval(x2);
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = eval(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = eval(x1);
        }
    }
    return std::max({f1, f2, eval(lo), eval(hi)});
}

double sup_interval(const ExponentialPolynomial& f, double a, double b, int samples) {
    // coarse double-precision scan to locate the maximum
    double best = -1.0;
    int besti = 0;
    for (int i = 0; i <= samples; ++i) {
        const double x = a + (b - a) * i / samples;
        const double v = std::sqrt(f.abs2(&x));
        if (v > best) {
            best = v;
            besti = i;
        }
    }
    const HighPrecAbs eval(f);
    const double h = (b - a) / samples;
    const double lo = std::max(a, a + (b - a) * besti / samples - h);
    const double hi = std::min(b, a + (b - a) * besti / samples + h);
    return std::max({golden_refine_1d(eval, lo, hi), eval(a), eval(b)});
}

// shared grid-plus-zoom scan over an axis-aligned box, optionally clipped to
// a ball around `center`
double sup_box(const ExponentialPolynomial& f, const std::vector<double>& lo,
               const std::vector<double>& hi, const std::vector<double>* center,
               double radius, int per_axis) {
    const int d = f.d;
    std::vector<double> x(static_cast<std::size_t>(d)), bx(static_cast<std::size_t>(d));
    double best = -1.0;
    const auto total =
        static_cast<std::int64_t>(std::pow(per_axis + 1, d));
    for (std::int64_t t = 0; t < total; ++t) {
        std::int64_t q = t;
        double n2 = 0;
        for (int c = 0; c < d; ++c) {
            const int ic = static_cast<int>(q % (per_axis + 1));
            q /= (per_axis + 1);
            const auto cc = static_cast<std::size_t>(c);
            x[cc] = lo[cc] + (hi[cc] - lo[cc]) * ic / per_axis;
            if (center) n2 += (x[cc] - (*center)[cc]) * (x[cc] - (*center)[cc]);
        }
        if (center && n2 > radius * radius) continue;
        const double v = std::sqrt(f.abs2(x.data()));
        if (v > best) {
            best = v;
            bx = x;
        }
    }
    if (best < 0) {  // grid missed the ball entirely; fall back to the center
        bx = *center;
        best = std::sqrt(f.abs2(bx.data()));
    }

    double h = 0;
    for (int c = 0; c < d; ++c)
        h = std::max(h, (hi[static_cast<std::size_t>(c)] - lo[static_cast<std::size_t>(c)]) / per_axis);
    for (int it = 0; it < 70; ++it) {
        bool moved = false;
        const auto stencil = static_cast<std::int64_t>(std::pow(5, d));
        for (std::int64_t t = 0; t < stencil; ++t) {
            std::int64_t q = t;
            double n2 = 0;
            for (int c = 0; c < d; ++c) {
                const int off = static_cast<int>(q % 5) - 2;
                q /= 5;
                const auto cc = static_cast<std::size_t>(c);
                x[cc] = std::clamp(bx[cc] + off * h * 0.5, lo[cc], hi[cc]);
                if (center) n2 += (x[cc] - (*center)[cc]) * (x[cc] - (*center)[cc]);
            }
            if (center && n2 > radius * radius) {
                const double scale = radius / std::sqrt(n2);
                for (int c = 0; c < d; ++c) {
                    const auto cc = static_cast<std::size_t>(c);
                    x[cc] = (*center)[cc] + (x[cc] - (*center)[cc]) * scale;
                }
            }
            const double v = std::sqrt(f.abs2(x.data()));
            if (v > best) {
                best = v;
                bx = x;
                moved = true;
            }
        }
        if (!moved) h *= 0.5;
        if (h < 1e-13) break;
    }
    return best;
}

}  // namespace

double sup_norm(const ExponentialPolynomial& f, const SetDescriptor& set,
                int resolution) {
    if (f.terms() == 0) throw domain_error("sup_norm: zero function");
    if (f.terms() > 64) throw domain_error("sup_norm: term cap (64) exceeded");
    if (set.d != f.d) throw domain_error("sup_norm: set/function dimension mismatch");
    if (f.d > 3) throw domain_error("sup_norm: dimension cap (3) exceeded");

    const int terms = static_cast<int>(f.terms());
    switch (set.kind) {
        case SetDescriptor::Kind::interval: {
            const int samples = resolution > 0 ? resolution : 4096 * terms;
            return sup_interval(f, set.a, set.b, samples);
        }
        case SetDescriptor::Kind::ball: {
            if (f.d == 1) {
                const int samples = resolution > 0 ? resolution : 4096 * terms;
                return sup_interval(f, set.center[0] - set.radius,
                                    set.center[0] + set.radius, samples);
            }
            const int per_axis =
                resolution > 0 ? resolution : std::max(96, 24 * terms);
            std::vector<double> lo(set.center), hi(set.center);
            for (int c = 0; c < f.d; ++c) {
                lo[static_cast<std::size_t>(c)] -= set.radius;
                hi[static_cast<std::size_t>(c)] += set.radius;
            }
            return sup_box(f, lo, hi, &set.center, set.radius, per_axis);
        }
        case SetDescriptor::Kind::box: {
            if (f.d == 1) {
                const int samples = resolution > 0 ? resolution : 4096 * terms;
                return sup_interval(f, set.lo[0], set.hi[0], samples);
            }
            const int per_axis =
                resolution > 0 ? resolution : std::max(96, 24 * terms);
            return sup_box(f, set.lo, set.hi, nullptr, 0.0, per_axis);
        }
        default: {
            const double pi = std::acos(-1.0);
            if (f.d == 1) {
                const int samples = resolution > 0 ? resolution : 4096 * terms;
                return sup_interval(f, -pi, pi, samples);
            }
            const int per_axis =
                resolution > 0 ? resolution : std::max(128, 32 * terms);
            std::vector<double> lo(static_cast<std::size_t>(f.d), -pi);
            std::vector<double> hi(static_cast<std::size_t>(f.d), pi);
            return sup_box(f, lo, hi, nullptr, 0.0, per_axis);
        }
    }
}

RatioReport turan_ratio(const ExponentialPolynomial& f, const SetDescriptor& E) {
    RatioReport rr;
    rr.terms = static_cast<int>(f.terms());
    rr.set_desc = E.describe();
    const double on_set = sup_norm(f, E);
    const double on_torus = sup_norm(f, SetDescriptor::torus(f.d));
    if (on_torus == 0) throw domain_error("turan_ratio: zero function");
    rr.measured_ratio = on_set / on_torus;
    if (rr.terms >= 2)
        rr.per_term_exponent = std::log(rr.measured_ratio) / (rr.terms - 1);
    return rr;
}

std::vector<ScalingRow> extremal_scaling_suite(int n_max,
                                               const std::vector<double>& r_list) {
    if (n_max < 0 || n_max > 8)
        throw domain_error("extremal_scaling_suite: n_max must be in [0, 8]");
    std::vector<ScalingRow> rows;
    for (int n = 0; n <= n_max; ++n) {
        const auto f = expoly_one_minus_cos_power(n);
        for (double r : r_list) {
            ScalingRow row;
            row.n = n;
            row.r = r;
            const auto rep = turan_ratio(f, SetDescriptor::interval(-r, r));
            row.measured = rep.measured_ratio;
            row.analytic = std::pow((1.0 - std::cos(r)) / 2.0, n);
            row.log_diff = n == 0 ? std::fabs(row.measured - 1.0)
                                  : std::fabs(std::log(row.measured) -
                                              std::log(row.analytic));
            rows.push_back(row);
        }
    }
    return rows;
}

ExponentialPolynomial random_trial_function(std::uint64_t seed, int trial_id,
                                            int terms) {
    if (terms < 1 || terms > 64)
        throw domain_error("random_trial_function: terms must be in [1, 64]");
    // splitmix-style per-trial stream; reproducible regardless of scheduling
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial_id) + 1));
    auto next = [&s]() {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::mt19937_64 rng(next());
    std::uniform_int_distribution<std::int64_t> freq(-20, 20);
    std::normal_distribution<double> gauss(0.0, 1.0);

    ExponentialPolynomial f;
    f.d = 1;
    std::vector<std::int64_t> used;
    while (static_cast<int>(f.freqs.size()) < terms) {
        const std::int64_t k = freq(rng);
        if (std::find(used.begin(), used.end(), k) != used.end()) continue;
        used.push_back(k);
        f.freqs.push_back({k});
        f.coeffs.emplace_back(gauss(rng), gauss(rng));
    }
    return f;
}

}  // namespace torusobs::turan
