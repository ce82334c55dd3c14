#pragma once

#include <cstddef>
#include <vector>

namespace torusobs::obs {

struct EigenResult {
    double value = 0;                // smallest eigenvalue
    std::vector<double> vector;      // unit eigenvector
    int sweeps = 0;
};

// Smallest eigenvalue of a symmetric matrix (row-major, n x n) by cyclic
// Jacobi rotations, iterated until the off-diagonal Frobenius norm is <= tol.
// Throws convergence_error after sweep_cap sweeps.
EigenResult jacobi_smallest(std::vector<double> a, std::size_t n,
                            double tol = 1e-12, int sweep_cap = 100);

// All eigenvalues, ascending.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n,
                                       double tol = 1e-12, int sweep_cap = 100);

}  // namespace torusobs::obs
