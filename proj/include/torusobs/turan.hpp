#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torusobs/expoly.hpp"
#include "torusobs/types.hpp"

namespace torusobs::turan {

// Measurement region: an interval of the 1-torus, a ball in T^d (d <= 3), or
// the full torus.
struct SetDescriptor {
    enum class Kind { interval, ball, box, torus } kind = Kind::torus;
    int d = 1;
    double a = 0, b = 0;            // interval
    std::vector<double> center;     // ball
    double radius = 0;
    std::vector<double> lo, hi;     // box

    static SetDescriptor interval(double a, double b);
    static SetDescriptor ball(std::vector<double> center, double radius);
    static SetDescriptor box(std::vector<double> lo, std::vector<double> hi);
    static SetDescriptor torus(int d);
    std::string describe() const;
};

// Dense-grid maximum of |f| with local refinement.  resolution <= 0 selects
// the documented default (4096 * terms samples per axis in 1-d, coarser grids
// plus zoom in higher dimensions; adequate for frequencies up to ~50).
double sup_norm(const ExponentialPolynomial& f, const SetDescriptor& set,
                int resolution = 0);

struct RatioReport {
    int terms = 0;
    std::string set_desc;
    double measured_ratio = 0;
    std::optional<double> per_term_exponent;
};

RatioReport turan_ratio(const ExponentialPolynomial& f, const SetDescriptor& E);

// Extremal-family sweep: rows compare the measured ratio of (1-cos x)^n on
// [-r, r] against the closed form ((1-cos r)/2)^n.
struct ScalingRow {
    int n = 0;
    double r = 0;
    double measured = 0;
    double analytic = 0;
    double log_diff = 0;
};

std::vector<ScalingRow> extremal_scaling_suite(int n_max,
                                               const std::vector<double>& r_list);

// Seeded random trial for the empirical floor studies: `terms` integer
// frequencies in [-20, 20], complex standard-normal coefficients.
ExponentialPolynomial random_trial_function(std::uint64_t seed, int trial_id,
                                            int terms);

}  // namespace torusobs::turan
