#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sympath/numerics.hpp"

namespace sympath {

/// Autonomous Hamiltonian on R^{2n} with analytic gradient and Hessian.
/// Reversibility means H(N x) = H(x), i.e. H is even in the momenta.
struct HamiltonianSpec {
    int n = 0;
    std::function<double(const Vec&)> value;
    std::function<Vec(const Vec&)> gradient;
    std::function<Mat(const Vec&)> hessian;
    std::string tag;

    /// max |H(N x) - H(x)| over pseudorandom sample points in a ball.
    double reversibility_residual(double radius = 2.0, int samples = 64) const;

    /// max symmetry defect of the Hessian over sample points.
    double hessian_symmetry_residual(double radius = 2.0, int samples = 16) const;

    Mat hqq(const Vec& x) const { return hessian(x).bottomRightCorner(n, n); }
    Mat hpp(const Vec& x) const { return hessian(x).topLeftCorner(n, n); }

    /// H = |p|^2 / 2 + |q|^2 / 2
    static HamiltonianSpec harmonic(int n);
    /// H = |p|^2 / 2 + |q|^2 / 2 + |q|^4 / 4 (radial quartic for n > 1)
    static HamiltonianSpec convex_quartic(int n);

    /// Polynomial in (p, q): a list of (coefficient, exponents[2n]) terms.
    struct Monomial {
        double coefficient = 0;
        std::vector<int> exponents;
    };
    static HamiltonianSpec polynomial(int n, std::vector<Monomial> terms);
};

} // namespace sympath
