#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace amspace {

using ScalarFunction = std::function<double(double)>;

/// n log-spaced points from lo to hi inclusive. Requires 0 < lo < hi, n >= 2.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

/// Golden-section search for a minimum of f on [a, b]. Stops when the
/// bracket width falls below rel_tol times its midpoint.
double golden_section_minimize(const ScalarFunction& f, double a, double b, double rel_tol = 1e-10);

/// Root of g on [a, b] by bisection; g(a) and g(b) must have opposite
/// signs (or one of them be zero). Stops at relative width rel_tol.
double bisect_root(const ScalarFunction& g, double a, double b, double rel_tol = 1e-12);

}  // namespace amspace
