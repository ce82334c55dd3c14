#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace torusobs {

// Integer frequency vector k in Z^d.  Comparison is coordinate-wise
// lexicographic, which fixes the canonical order used everywhere.
using Point = std::vector<std::int64_t>;

// Input outside the documented domain of an operation.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An iterative solver exceeded its sweep cap.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::int64_t isqrt(std::int64_t x) {
    if (x < 0) throw domain_error("isqrt: negative argument");
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (s > 0 && s * s > x) --s;
    while ((s + 1) * (s + 1) <= x) ++s;
    return s;
}

inline bool is_perfect_square(std::int64_t x, std::int64_t& root) {
    if (x < 0) return false;
    root = isqrt(x);
    return root * root == x;
}

inline std::int64_t dist2(const Point& a, const Point& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::int64_t d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline std::int64_t norm2(const Point& a) {
    std::int64_t s = 0;
    for (std::int64_t c : a) s += c * c;
    return s;
}

// Worker-pool cap shared by all parallel kernels.  Resolution order:
// explicit set_thread_cap(), then TORUS_OBS_THREADS, then the OpenMP default.
int thread_cap();
void set_thread_cap(int n);

inline std::string point_to_string(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

}  // namespace torusobs
