#pragma once

namespace torusobs::obs {

// Normalized Fourier transform of the unit-ball indicator in dimension d:
//   B_d(rho) = Gamma(d/2+1) (2/rho)^{d/2} J_{d/2}(rho),  B_d(0) = 1,
// equivalently the mean of e^{i rho x_1} over the unit ball.  Closed forms:
//   B_1 = sin(rho)/rho,  B_2 = 2 J_1(rho)/rho,
//   B_3 = 3 (sin rho - rho cos rho)/rho^3.
// Evaluation: power series for rho <= 12; beyond that, spherical-Bessel
// recurrences for odd d and Miller downward recurrence for even d.  Accuracy
// ~1e-13 absolute for rho <= 500 (relative except near zeros of J_{d/2}).
double ball_kernel(int d, double rho);

}  // namespace torusobs::obs
