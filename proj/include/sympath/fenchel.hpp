#pragma once

#include <functional>

#include "sympath/numerics.hpp"

namespace sympath {

/// Strictly convex map with superlinear growth (caller-asserted), given by
/// value, gradient and Hessian callbacks.
struct ConvexMap {
    int dimension = 0;
    std::function<double(const Vec&)> value;
    std::function<Vec(const Vec&)> gradient;
    std::function<Mat(const Vec&)> hessian;
};

struct FenchelResult {
    double value = 0;   // F*(y)
    Vec maximizer;      // x with F'(x) = y
    double residual = 0; // || F'(x) - y ||
};

/// Fenchel conjugate F*(y) = sup_x { x . y - F(x) } by damped Newton on
/// F'(x) = y from x = 0. Throws NoConvergence after 100 iterations.
FenchelResult fenchel(const ConvexMap& f, const Vec& y, double grad_tol = 1e-10);

} // namespace sympath
